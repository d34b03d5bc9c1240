//! Generators of irreducible G-submodules of an irreducible Ĝ-module.
//!
//! Four families are produced, each a set of dominant G-weights known to
//! occur with multiplicity at least one:
//!
//! * PRV components: dominant representatives of `rho(w_hat nu_hat)`.
//! * Line segments in the direction of a root `alpha` in `Δ₂`, starting at a
//!   dominant restriction `rho(w_hat nu_hat)` and of length the smaller of the
//!   two fiber pairings.
//! * Hyperrectangles spanned by such segments for pairwise orthogonal roots.
//! * For diagonal pairs only: segments and rectangles through virtual PRV
//!   components `v mu + w nu` in root directions `beta` (not necessarily
//!   simple) subject to a simplicity condition on `beta`, `v^-1 beta` or
//!   `w^-1 beta`.
//!
//! Every object records how it was produced. Segment and rectangle lattice
//! points are integral translates `start - k * direction`; other rational
//! points of the segment are never reported.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pairs::SphericalPair;
use crate::rootsys::{orthogonal_subsets, RootSystem, Weight, WeylWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Theorem {
    Prv,
    MainSegment,
    OrthoRect,
    SymSegment,
    SymRect,
}

impl Theorem {
    /// Fixed order used for incremental counts.
    pub const ALL: [Theorem; 5] =
        [Theorem::Prv, Theorem::MainSegment, Theorem::OrthoRect, Theorem::SymSegment, Theorem::SymRect];

    pub fn label(&self) -> &'static str {
        match self {
            Theorem::Prv => "PRV",
            Theorem::MainSegment => "MAIN_SEGMENT",
            Theorem::OrthoRect => "ORTHO_RECT",
            Theorem::SymSegment => "SYM_SEGMENT",
            Theorem::SymRect => "SYM_RECT",
        }
    }

    /// Whether the generator only makes sense for `G ⊂ G×G`.
    pub fn needs_diagonal(&self) -> bool {
        matches!(self, Theorem::SymSegment | Theorem::SymRect)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "prv" => Ok(Theorem::Prv),
            "main" | "main-segment" => Ok(Theorem::MainSegment),
            "ortho" | "ortho-rect" => Ok(Theorem::OrthoRect),
            "sym-seg" | "sym-segment" => Ok(Theorem::SymSegment),
            "sym-rect" => Ok(Theorem::SymRect),
            other => Err(Error::Parse(format!("unknown theorem tag `{other}`"))),
        }
    }
}

/// How a weight, segment or rectangle was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// From the orbit point `w_hat nu_hat`, along the listed simple roots of G.
    Ambient { w_hat: WeylWord, roots: Vec<usize>, nu_hat: Weight },
    /// From the virtual PRV component `v mu + w nu` along the roots `betas`.
    Tensor { v_mu: Weight, w_nu: Weight, betas: Vec<Weight>, mu: Weight, nu: Weight },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub theorem: Theorem,
    pub witness: Witness,
}

/// Lattice segment `{start - k * direction : 0 <= k <= length}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub start: Weight,
    pub end: Weight,
    /// A root of G.
    pub direction: Weight,
    pub length: i64,
    pub provenance: Provenance,
}

impl Segment {
    fn new(start: Weight, direction: Weight, length: i64, provenance: Provenance) -> Self {
        debug_assert!(length >= 0);
        let end = start.sub_multiple(length, &direction);
        Segment { start, end, direction, length, provenance }
    }

    pub fn points(&self) -> Vec<Weight> {
        (0..=self.length).map(|k| self.start.sub_multiple(k, &self.direction)).collect()
    }

    /// Dominant lattice points, in order from `start` to `end`.
    pub fn dominant_points(&self, rs: &RootSystem) -> Vec<Weight> {
        self.points().into_iter().filter(|p| rs.is_dominant(p)).collect()
    }

    /// Identifies the point set: the unordered pair of end points.
    pub fn key(&self) -> (Weight, Weight) {
        if self.start <= self.end {
            (self.start.clone(), self.end.clone())
        } else {
            (self.end.clone(), self.start.clone())
        }
    }
}

pub fn segment_dominant_points(rs: &RootSystem, s: &Segment) -> Vec<Weight> {
    s.dominant_points(rs)
}

/// `{corner - sum k_i root_i : 0 <= k_i <= extent_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperrectangle {
    pub corner: Weight,
    pub axes: Vec<(Weight, i64)>,
    pub provenance: Provenance,
}

impl Hyperrectangle {
    pub fn points(&self) -> Vec<Weight> {
        let mut pts = vec![self.corner.clone()];
        for (root, extent) in &self.axes {
            pts = pts
                .iter()
                .flat_map(|p| (0..=*extent).map(move |k| p.sub_multiple(k, root)))
                .collect();
        }
        pts
    }

    pub fn dominant_points(&self, rs: &RootSystem) -> Vec<Weight> {
        self.points().into_iter().filter(|p| rs.is_dominant(p)).collect()
    }

    /// The edge along each axis, starting at the corner.
    pub fn edges(&self) -> Vec<Segment> {
        self.axes
            .iter()
            .map(|(root, extent)| {
                Segment::new(self.corner.clone(), root.clone(), *extent, self.provenance.clone())
            })
            .collect()
    }

    pub fn key(&self) -> Vec<Weight> {
        let mut p = self.points();
        p.sort();
        p.dedup();
        p
    }
}

/// A dominant weight with every generator that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedComponent {
    pub weight: Weight,
    pub tags: BTreeSet<Theorem>,
    /// At least one witness per tag.
    pub witnesses: Vec<Provenance>,
}

fn require_dominant(rs: &RootSystem, w: &Weight) -> Result<()> {
    if w.len() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: w.len() });
    }
    if !rs.is_dominant(w) {
        return Err(Error::NonDominantInput(w.to_string()));
    }
    Ok(())
}

/// Orbit points `w_hat nu_hat` whose restriction is dominant, with the restriction.
fn dominant_restrictions(pair: &SphericalPair, nu_hat: &Weight) -> Vec<(Weight, WeylWord, Weight)> {
    pair.amb()
        .orbit_with_words(nu_hat)
        .into_iter()
        .filter_map(|(chi, word)| {
            let r = pair.restrict_unchecked(&chi);
            pair.sub().is_dominant(&r).then_some((chi, word, r))
        })
        .collect()
}

fn prv_with_witnesses(pair: &SphericalPair, nu_hat: &Weight) -> Result<BTreeMap<Weight, WeylWord>> {
    require_dominant(pair.amb(), nu_hat)?;
    let mut out = BTreeMap::new();
    for (_, word, r) in dominant_restrictions(pair, nu_hat) {
        out.entry(r).or_insert(word);
    }
    Ok(out)
}

/// PRV components of `V_Ĝ(nu_hat)`: dominant representatives of the
/// restricted orbit of `nu_hat`.
pub fn prv_components(pair: &SphericalPair, nu_hat: &Weight) -> Result<BTreeSet<Weight>> {
    Ok(prv_with_witnesses(pair, nu_hat)?.into_keys().collect())
}

/// PRV components of `V_Spin7(nu_hat)` restricted to `G₂`, in closed form.
pub fn g2_spin7_prv_closed_form(nu_hat: &Weight) -> Result<BTreeSet<Weight>> {
    let c = nu_hat.coords();
    if c.len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: c.len() });
    }
    if c.iter().any(|&x| x < 0) {
        return Err(Error::NonDominantInput(nu_hat.to_string()));
    }
    let (a, b, d) = (c[0], c[1], c[2]);
    let nu1 = [a + d, b];
    let nu2 = if a <= d { [-a + d, a + b] } else { [a - d, b + d] };
    let nu3 = if a <= b + d { [-a + b + d, a] } else { [a - b - d, b + d] };
    let nu4 = if a <= b { [-a + b, a] } else { [a - b, b] };
    Ok([nu1, nu2, nu3, nu4].into_iter().map(Weight::from).collect())
}

/// Segments along every `alpha` in `Δ₂` from every dominant restriction
/// `rho(w_hat nu_hat)`, with end point `rho(s_{alpha_hat_1} w_hat nu_hat)` where
/// `alpha_hat_1` has the smaller pairing. Zero-length segments are kept.
pub fn main_segments(pair: &SphericalPair, nu_hat: &Weight) -> Result<Vec<Segment>> {
    require_dominant(pair.amb(), nu_hat)?;
    let sub = pair.sub();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (chi, word, r) in dominant_restrictions(pair, nu_hat) {
        for &(alpha, [a, b]) in pair.delta2() {
            let p1 = chi.coords()[a].min(chi.coords()[b]);
            let root = sub.simple_root(alpha);
            let direction = if p1 < 0 { -&root } else { root };
            let provenance = Provenance {
                theorem: Theorem::MainSegment,
                witness: Witness::Ambient { w_hat: word.clone(), roots: vec![alpha], nu_hat: nu_hat.clone() },
            };
            let seg = Segment::new(r.clone(), direction, p1.abs(), provenance);
            if seen.insert(seg.key()) {
                out.push(seg);
            }
        }
    }
    Ok(out)
}

/// Hyperrectangles spanned by the segments of 2..=`max_axes` pairwise
/// orthogonal roots of `Δ₂` sharing the corner `rho(w_hat nu_hat)`.
///
/// Each axis whose smaller fiber pairing is negative is first flipped by the
/// corresponding reflection of Ĝ, which moves the corner to the other end of
/// that segment and makes every extent nonnegative.
pub fn ortho_rectangles(pair: &SphericalPair, nu_hat: &Weight, max_axes: usize) -> Result<Vec<Hyperrectangle>> {
    require_dominant(pair.amb(), nu_hat)?;
    let sub = pair.sub();
    let amb = pair.amb();
    let pool: Vec<usize> = pair.delta2().iter().map(|&(a, _)| a).collect();
    let subsets: Vec<Vec<usize>> =
        orthogonal_subsets(sub, &pool, max_axes).into_iter().filter(|s| s.len() >= 2).collect();
    let fiber_of = |alpha: usize| pair.delta2().iter().find(|&&(a, _)| a == alpha).unwrap().1;

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    if subsets.is_empty() {
        return Ok(out);
    }
    for (chi, word, _) in dominant_restrictions(pair, nu_hat) {
        for set in &subsets {
            let mut flipped = chi.clone();
            for &alpha in set {
                let [a, b] = fiber_of(alpha);
                let (pa, pb) = (flipped.coords()[a], flipped.coords()[b]);
                let j = if pa <= pb { a } else { b };
                if pa.min(pb) < 0 {
                    amb.reflect_in_place(&mut flipped, j);
                }
            }
            let axes = set
                .iter()
                .map(|&alpha| {
                    let [a, b] = fiber_of(alpha);
                    let extent = flipped.coords()[a].min(flipped.coords()[b]);
                    debug_assert!(extent >= 0);
                    (sub.simple_root(alpha), extent)
                })
                .collect();
            let rect = Hyperrectangle {
                corner: pair.restrict_unchecked(&flipped),
                axes,
                provenance: Provenance {
                    theorem: Theorem::OrthoRect,
                    witness: Witness::Ambient { w_hat: word.clone(), roots: set.clone(), nu_hat: nu_hat.clone() },
                },
            };
            if seen.insert(rect.key()) {
                out.push(rect);
            }
        }
    }
    Ok(out)
}

/// For every orbit point `x` of `lambda`, the sets `v(S)` (as root indices)
/// over all `v` with `v lambda = x` and all `S` in `subsets`.
fn direction_families(
    rs: &RootSystem,
    lambda: &Weight,
    elements: &[WeylWord],
    subsets: &[Vec<usize>],
) -> BTreeMap<Weight, BTreeSet<Vec<usize>>> {
    let simple: Vec<usize> = (0..rs.semisimple_rank()).map(|i| rs.simple_root_index(i)).collect();
    let mut out: BTreeMap<Weight, BTreeSet<Vec<usize>>> = BTreeMap::new();
    for v in elements {
        let x = rs.apply_word(lambda, v);
        let entry = out.entry(x).or_default();
        for set in subsets {
            let mut image: Vec<usize> = set.iter().map(|&i| rs.act_on_root(v, simple[i])).collect();
            image.sort_unstable();
            entry.insert(image);
        }
    }
    out
}

fn check_tensor_input(pair: &SphericalPair, mu: &Weight, nu: &Weight) -> Result<()> {
    if !pair.is_diagonal() {
        return Err(Error::NotDiagonalPair);
    }
    require_dominant(pair.sub(), mu)?;
    require_dominant(pair.sub(), nu)
}

/// The segment of `beta` through the four virtual PRV components
/// `x + y`, `x + s_beta y`, `s_beta x + y`, `s_beta x + s_beta y`, between
/// the two with the largest pairing against `beta^vee`.
fn virtual_segment(rs: &RootSystem, x: &Weight, y: &Weight, beta: usize, mu: &Weight, nu: &Weight) -> Segment {
    let root = &rs.roots()[beta];
    let a = rs.coroot_pairing(x, root);
    let b = rs.coroot_pairing(y, root);
    // lambda_l = (x + y) - k_l beta, with pairing a + b - 2 k_l
    let mut lambdas = [(a + b, 0i64), (a - b, b), (b - a, a), (-a - b, a + b)];
    // stable: ties keep the smaller index
    lambdas.sort_by_key(|p| std::cmp::Reverse(p.0));
    let (top, second) = (lambdas[0], lambdas[1]);
    let start = (x + y).sub_multiple(top.1, &root.weight);
    let length = (top.0 - second.0) / 2;
    let provenance = Provenance {
        theorem: Theorem::SymSegment,
        witness: Witness::Tensor {
            v_mu: x.clone(),
            w_nu: y.clone(),
            betas: vec![root.weight.clone()],
            mu: mu.clone(),
            nu: nu.clone(),
        },
    };
    Segment::new(start, root.weight.clone(), length, provenance)
}

/// Segments through virtual PRV components of `V(mu) ⊗ V(nu)` in every root
/// direction `beta` such that `beta`, `v^-1 beta` or `w^-1 beta` is simple.
pub fn sym_segments(pair: &SphericalPair, mu: &Weight, nu: &Weight) -> Result<Vec<Segment>> {
    check_tensor_input(pair, mu, nu)?;
    let rs = pair.sub();
    let singletons: Vec<Vec<usize>> = (0..rs.semisimple_rank()).map(|i| vec![i]).collect();
    let elements = rs.weyl_elements();
    let fam_mu = direction_families(rs, mu, &elements, &singletons);
    let fam_nu = direction_families(rs, nu, &elements, &singletons);
    let simple: BTreeSet<usize> = (0..rs.semisimple_rank()).map(|i| rs.simple_root_index(i)).collect();

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (x, fx) in &fam_mu {
        for (y, fy) in &fam_nu {
            let mut betas = simple.clone();
            betas.extend(fx.iter().chain(fy).map(|s| s[0]));
            for beta in betas {
                let seg = virtual_segment(rs, x, y, beta, mu, nu);
                if seen.insert(seg.key()) {
                    out.push(seg);
                }
            }
        }
    }
    Ok(out)
}

/// Hyperrectangles spanned by `s` pairwise orthogonal virtual segments,
/// `2 <= s <= max_axes`, whose directions are `u(S)` for `u` in `{1, v, w}`
/// and `S` a set of pairwise orthogonal simple roots.
///
/// Per axis, `v mu` and `w nu` are flipped by `s_beta` until both pairings with
/// `beta^vee` are nonnegative; the corner is then `v mu + w nu` and the extent
/// on `beta` is the smaller of the two pairings.
pub fn sym_rectangles(pair: &SphericalPair, mu: &Weight, nu: &Weight, max_axes: usize) -> Result<Vec<Hyperrectangle>> {
    check_tensor_input(pair, mu, nu)?;
    let rs = pair.sub();
    let all: Vec<usize> = (0..rs.semisimple_rank()).collect();
    let subsets: Vec<Vec<usize>> =
        orthogonal_subsets(rs, &all, max_axes).into_iter().filter(|s| s.len() >= 2).collect();
    let mut out = Vec::new();
    if subsets.is_empty() {
        return Ok(out);
    }
    let elements = rs.weyl_elements();
    let fam_mu = direction_families(rs, mu, &elements, &subsets);
    let fam_nu = direction_families(rs, nu, &elements, &subsets);
    let identity: BTreeSet<Vec<usize>> = subsets
        .iter()
        .map(|s| s.iter().map(|&i| rs.simple_root_index(i)).collect())
        .collect();

    let mut seen = HashSet::new();
    for (x, fx) in &fam_mu {
        for (y, fy) in &fam_nu {
            let families: BTreeSet<&Vec<usize>> = identity.iter().chain(fx).chain(fy).collect();
            for betas in families {
                let mut xf = x.clone();
                let mut yf = y.clone();
                for &beta in betas {
                    let root = &rs.roots()[beta];
                    if rs.coroot_pairing(&xf, root) < 0 {
                        xf = rs.reflect_by_root(&xf, root);
                    }
                    if rs.coroot_pairing(&yf, root) < 0 {
                        yf = rs.reflect_by_root(&yf, root);
                    }
                }
                let axes = betas
                    .iter()
                    .map(|&beta| {
                        let root = &rs.roots()[beta];
                        let extent = rs.coroot_pairing(&xf, root).min(rs.coroot_pairing(&yf, root));
                        (root.weight.clone(), extent)
                    })
                    .collect();
                let rect = Hyperrectangle {
                    corner: &xf + &yf,
                    axes,
                    provenance: Provenance {
                        theorem: Theorem::SymRect,
                        witness: Witness::Tensor {
                            v_mu: x.clone(),
                            w_nu: y.clone(),
                            betas: betas.iter().map(|&b| rs.roots()[b].weight.clone()).collect(),
                            mu: mu.clone(),
                            nu: nu.clone(),
                        },
                    },
                };
                if seen.insert(rect.key()) {
                    out.push(rect);
                }
            }
        }
    }
    Ok(out)
}

/// Input of [`all_components`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Ambient(Weight),
    Tensor(Weight, Weight),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub theorems: BTreeSet<Theorem>,
    /// Defaults to the largest pairwise orthogonal subset of the eligible simple roots.
    pub max_axes: Option<usize>,
}

impl Default for Options {
    fn default() -> Self {
        Options { theorems: Theorem::ALL.into_iter().collect(), max_axes: None }
    }
}

/// Default `max_axes` for the rectangle generators of `pair`.
pub fn default_max_axes(pair: &SphericalPair) -> usize {
    let pool: Vec<usize> = pair.delta2().iter().map(|&(a, _)| a).collect();
    pair.sub().max_orthogonal_subset(&pool)
}

/// Union of every applicable generator, one entry per dominant weight,
/// sorted by decreasing height and then lexicographically.
pub fn all_components(pair: &SphericalPair, input: &Input, options: &Options) -> Result<Vec<TaggedComponent>> {
    let (nu_hat, tensor) = match input {
        Input::Ambient(nu_hat) => {
            require_dominant(pair.amb(), nu_hat)?;
            let tensor = if pair.is_diagonal() { Some(pair.split_diagonal(nu_hat)?) } else { None };
            (nu_hat.clone(), tensor)
        }
        Input::Tensor(mu, nu) => {
            check_tensor_input(pair, mu, nu)?;
            (pair.join_diagonal(mu, nu)?, Some((mu.clone(), nu.clone())))
        }
    };
    let sub = pair.sub();
    let wants = |t: Theorem| options.theorems.contains(&t);
    let max_axes = options.max_axes.unwrap_or_else(|| default_max_axes(pair));

    let mut acc: BTreeMap<Weight, TaggedComponent> = BTreeMap::new();
    let mut add = |weight: Weight, provenance: &Provenance| {
        let entry = acc.entry(weight.clone()).or_insert_with(|| TaggedComponent {
            weight,
            tags: BTreeSet::new(),
            witnesses: Vec::new(),
        });
        if entry.tags.insert(provenance.theorem) {
            entry.witnesses.push(provenance.clone());
        }
    };

    if wants(Theorem::Prv) {
        for (w, word) in prv_with_witnesses(pair, &nu_hat)? {
            let roots = Vec::new();
            let witness = Witness::Ambient { w_hat: word, roots, nu_hat: nu_hat.clone() };
            add(w, &Provenance { theorem: Theorem::Prv, witness });
        }
    }
    if wants(Theorem::MainSegment) {
        for seg in main_segments(pair, &nu_hat)? {
            for p in seg.dominant_points(sub) {
                add(p, &seg.provenance);
            }
        }
    }
    if wants(Theorem::OrthoRect) {
        for rect in ortho_rectangles(pair, &nu_hat, max_axes)? {
            for p in rect.dominant_points(sub) {
                add(p, &rect.provenance);
            }
        }
    }
    if let Some((mu, nu)) = &tensor {
        if wants(Theorem::SymSegment) {
            for seg in sym_segments(pair, mu, nu)? {
                for p in seg.dominant_points(sub) {
                    add(p, &seg.provenance);
                }
            }
        }
        if wants(Theorem::SymRect) {
            for rect in sym_rectangles(pair, mu, nu, max_axes)? {
                for p in rect.dominant_points(sub) {
                    add(p, &rect.provenance);
                }
            }
        }
    }

    let mut out: Vec<TaggedComponent> = acc.into_values().collect();
    sort_by_height(sub, &mut out);
    Ok(out)
}

/// Decreasing height, then lexicographic.
pub fn sort_by_height(rs: &RootSystem, comps: &mut [TaggedComponent]) {
    comps.sort_by(|a, b| rs.height(&b.weight).cmp(&rs.height(&a.weight)).then_with(|| a.weight.cmp(&b.weight)));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{branch, tensor_decompose};

    fn w<const N: usize>(c: [i64; N]) -> Weight {
        Weight::from(c)
    }

    fn g2() -> SphericalPair {
        SphericalPair::g2_spin7()
    }

    fn diag(t: &str) -> SphericalPair {
        SphericalPair::builtin(&format!("diag:{t}")).unwrap()
    }

    #[test]
    fn g2_prv_components() {
        let got = prv_components(&g2(), &w([2, 2, 1])).unwrap();
        let expected: BTreeSet<Weight> = [w([3, 2]), w([1, 3]), w([1, 2]), w([0, 2])].into();
        assert_eq!(got, expected);
        assert_eq!(g2_spin7_prv_closed_form(&w([2, 2, 1])).unwrap(), expected);
    }

    #[test]
    fn closed_form_rejects_bad_input() {
        assert!(matches!(g2_spin7_prv_closed_form(&w([1, 2])), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(g2_spin7_prv_closed_form(&w([1, -1, 0])), Err(Error::NonDominantInput(_))));
        assert!(matches!(prv_components(&g2(), &w([0, -1, 0])), Err(Error::NonDominantInput(_))));
    }

    #[test]
    fn g2_segments() {
        let segs = main_segments(&g2(), &w([2, 2, 1])).unwrap();
        let mut got: Vec<((Weight, Weight), i64)> = segs.iter().map(|s| (s.key(), s.length)).collect();
        got.sort();
        let mut expected = vec![
            ((w([1, 3]), w([3, 2])), 1),
            ((w([1, 2]), w([9, -2])), 4),
            ((w([0, 2]), w([10, -3])), 5),
        ];
        expected.sort();
        assert_eq!(got, expected);
        for s in &segs {
            assert_eq!(&s.end - &s.start, s.direction.scaled(-s.length));
            assert!(s.direction == w([2, -1]) || s.direction == w([-2, 1]));
        }
    }

    #[test]
    fn dominant_points_of_a_segment() {
        let rs = RootSystem::of("G2").unwrap();
        let prov = Provenance {
            theorem: Theorem::MainSegment,
            witness: Witness::Ambient { w_hat: WeylWord::identity(), roots: vec![0], nu_hat: w([2, 2, 1]) },
        };
        let seg = Segment::new(w([0, 2]), w([-2, 1]), 5, prov.clone());
        assert_eq!(seg.end, w([10, -3]));
        assert_eq!(segment_dominant_points(&rs, &seg), vec![w([0, 2]), w([2, 1]), w([4, 0])]);
        let point = Segment::new(w([3, 2]), w([2, -1]), 0, prov);
        assert_eq!(point.dominant_points(&rs), vec![w([3, 2])]);
    }

    #[test]
    fn g2_segment_points_occur() {
        let pair = g2();
        let truth = branch(&pair, &w([2, 2, 1])).unwrap();
        for seg in main_segments(&pair, &w([2, 2, 1])).unwrap() {
            for p in seg.dominant_points(pair.sub()) {
                assert!(truth.contains(&p), "{p}");
            }
        }
        assert!(!truth.contains(&w([6, 0])));
    }

    #[test]
    fn g2_has_no_rectangles() {
        // Δ₂ has a single root
        assert_eq!(default_max_axes(&g2()), 1);
        assert!(ortho_rectangles(&g2(), &w([2, 2, 1]), 3).unwrap().is_empty());
    }

    #[test]
    fn a1xa1_rectangle() {
        let pair = diag("A1xA1");
        let rects = ortho_rectangles(&pair, &w([1, 1, 1, 1]), 2).unwrap();
        let rect = rects.iter().find(|r| r.corner == w([2, 2])).expect("rectangle at (2,2)");
        assert_eq!(rect.axes.iter().map(|a| a.1).collect::<Vec<_>>(), vec![1, 1]);
        let mut pts = rect.points();
        pts.sort();
        assert_eq!(pts, vec![w([0, 0]), w([0, 2]), w([2, 0]), w([2, 2])]);
        assert_eq!(rect.edges().len(), 2);
    }

    #[test]
    fn sl2_virtual_segment() {
        let pair = diag("A1");
        let segs = sym_segments(&pair, &w([1]), &w([1])).unwrap();
        let seg = segs.iter().find(|s| s.start == w([2])).unwrap();
        assert_eq!(seg.end, w([0]));
        assert_eq!(seg.dominant_points(pair.sub()), vec![w([2]), w([0])]);
    }

    #[test]
    fn sym_generators_need_a_diagonal_pair() {
        assert_eq!(sym_segments(&g2(), &w([1, 0]), &w([1, 0])).unwrap_err(), Error::NotDiagonalPair);
        assert_eq!(sym_rectangles(&g2(), &w([1, 0]), &w([1, 0]), 2).unwrap_err(), Error::NotDiagonalPair);
        let input = Input::Tensor(w([1, 0]), w([0, 1]));
        assert_eq!(all_components(&g2(), &input, &Options::default()).unwrap_err(), Error::NotDiagonalPair);
    }

    #[test]
    fn a2_non_simple_directions_are_sound() {
        let pair = diag("A2");
        let (mu, nu) = (w([1, 1]), w([1, 1]));
        let segs = sym_segments(&pair, &mu, &nu).unwrap();
        let highest = w([1, 1]);
        assert!(segs.iter().any(|s| s.direction == highest || s.direction == -&highest));
        let truth = tensor_decompose(pair.sub(), &mu, &nu).unwrap();
        for s in &segs {
            for p in s.dominant_points(pair.sub()) {
                assert!(truth.contains(&p), "{p}");
            }
        }
    }

    #[test]
    fn all_components_is_sorted_and_tagged() {
        let pair = diag("C3");
        let input = Input::Tensor(w([2, 1, 0]), w([0, 3, 1]));
        let comps = all_components(&pair, &input, &Options::default()).unwrap();
        assert_eq!(comps.len(), 26);
        assert_eq!(comps[0].weight, w([2, 4, 1]));
        for pair_of in comps.windows(2) {
            let (a, b) = (pair.sub().height(&pair_of[0].weight), pair.sub().height(&pair_of[1].weight));
            assert!(a > b || (a == b && pair_of[0].weight < pair_of[1].weight));
        }
        for c in &comps {
            assert!(!c.tags.is_empty());
            let witnessed: BTreeSet<Theorem> = c.witnesses.iter().map(|p| p.theorem).collect();
            assert_eq!(witnessed, c.tags);
        }
        // the ambient input gives the same answer
        let ambient = Input::Ambient(w([2, 1, 0, 0, 3, 1]));
        assert_eq!(all_components(&pair, &ambient, &Options::default()).unwrap(), comps);
    }

    #[test]
    fn theorem_filter() {
        let pair = diag("C3");
        let input = Input::Tensor(w([2, 1, 0]), w([0, 3, 1]));
        let only_prv = Options { theorems: [Theorem::Prv].into(), max_axes: None };
        let comps = all_components(&pair, &input, &only_prv).unwrap();
        assert_eq!(comps.len(), 12);
        assert!(comps.iter().all(|c| c.tags == [Theorem::Prv].into()));
    }

    #[test]
    fn theorem_names() {
        for t in Theorem::ALL {
            assert_eq!(t.label().parse::<Theorem>().unwrap(), t);
        }
        assert_eq!("sym-seg".parse::<Theorem>().unwrap(), Theorem::SymSegment);
        assert!("foo".parse::<Theorem>().is_err());
    }
}
