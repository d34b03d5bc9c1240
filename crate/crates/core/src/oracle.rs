//! Brute-force ground truth for the generators.
//!
//! Weight multiplicities come from Freudenthal's recursion run on the
//! dominant weights only, tensor products from the Brauer–Klimyk rule, and
//! branching from restricting the full character through `rho` and peeling
//! off irreducible characters from the top.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{TaggedComponent, Theorem};
use crate::pairs::SphericalPair;
use crate::rootsys::{RootSystem, Weight};

/// Character of one irreducible module: every weight with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub highest: Weight,
    pub entries: BTreeMap<Weight, u64>,
}

impl CharacterTable {
    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.entries.values().sum()
    }
}

/// Dominant weights with positive multiplicity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub entries: BTreeMap<Weight, u64>,
}

impl Decomposition {
    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.multiplicity(w) > 0
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.entries.iter()
    }

    /// `sum mult(lambda) * dim V(lambda)`.
    pub fn total_dimension(&self, rs: &RootSystem) -> Result<u64> {
        self.entries.iter().try_fold(0u64, |acc, (w, &m)| {
            let d = weyl_dimension(rs, w)?;
            d.checked_mul(m)
                .and_then(|x| acc.checked_add(x))
                .ok_or(Error::Overflow("total dimension"))
        })
    }
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

/// Multiplicities of the dominant weights of `V(lambda)` by Freudenthal's formula.
pub fn dominant_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    require_dominant(rs, lambda)?;

    // Every dominant weight below lambda is reached through a chain of
    // dominant weights differing by positive roots.
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut layer = vec![lambda.clone()];
    let mut dominant = Vec::new();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for mu in layer {
            for root in rs.positive_roots() {
                let nu = &mu - &root.weight;
                if rs.is_dominant(&nu) && seen.insert(nu.clone()) {
                    next.push(nu);
                }
            }
            dominant.push(mu);
        }
        layer = next;
    }
    let depth = |mu: &Weight| -> Vec<i64> {
        rs.root_lattice_coords(&(lambda - mu)).expect("dominant weight outside lambda - Q+")
    };
    let mut keyed: Vec<(i64, Vec<i64>, Weight)> = dominant
        .into_iter()
        .map(|mu| {
            let c = depth(&mu);
            (c.iter().sum(), c, mu)
        })
        .collect();
    keyed.sort();

    let two_delta = rs.weyl_vector().scaled(2);
    let mut mult: HashMap<Weight, i64> = HashMap::with_capacity(keyed.len());
    for (height, c, mu) in keyed {
        if height == 0 {
            mult.insert(mu, 1);
            continue;
        }
        // (lambda + delta)^2 - (mu + delta)^2 = (lambda - mu, lambda + mu + 2 delta)
        let denom = rs.form(&c, &(&(lambda + &mu) + &two_delta));
        let mut num: i64 = 0;
        for root in rs.positive_roots() {
            let mut x = &mu + &root.weight;
            loop {
                let d = rs.dominant(&x);
                if !seen.contains(&d) {
                    break;
                }
                let m = *mult.get(&d).expect("dominant weights are processed by depth");
                let term = rs
                    .form(&root.simple_coords, &x)
                    .checked_mul(2)
                    .and_then(|t| t.checked_mul(m))
                    .ok_or(Error::Overflow("Freudenthal recursion"))?;
                num = num.checked_add(term).ok_or(Error::Overflow("Freudenthal recursion"))?;
                x = &x + &root.weight;
            }
        }
        assert!(denom > 0 && num % denom == 0, "Freudenthal: {num}/{denom} at {mu}");
        mult.insert(mu, num / denom);
    }
    Ok(mult
        .into_iter()
        .filter(|&(_, m)| m > 0)
        .map(|(w, m)| (w, m as u64))
        .collect())
}

/// Full character of `V(lambda)`.
pub fn weight_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<CharacterTable> {
    let dom = dominant_multiplicities(rs, lambda)?;
    let mut entries = BTreeMap::new();
    for (mu, m) in dom {
        for x in rs.weyl_orbit(&mu) {
            entries.insert(x, m);
        }
    }
    Ok(CharacterTable { highest: lambda.clone(), entries })
}

/// Weyl's dimension formula.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    require_dominant(rs, lambda)?;
    let shifted = lambda + rs.weyl_vector();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for root in rs.positive_roots() {
        let a = rs.coroot_pairing(&shifted, root) as u128;
        let b = rs.coroot_pairing(rs.weyl_vector(), root) as u128;
        num = num.checked_mul(a).ok_or(Error::Overflow("Weyl dimension"))?;
        den = den.checked_mul(b).ok_or(Error::Overflow("Weyl dimension"))?;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    assert_eq!(den, 1, "non-integral Weyl dimension");
    u64::try_from(num).map_err(|_| Error::Overflow("Weyl dimension"))
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn finish(rs: &RootSystem, acc: HashMap<Weight, i64>) -> Result<Decomposition> {
    let mut entries = BTreeMap::new();
    for (w, m) in acc {
        match m {
            0 => {}
            m if m < 0 => {
                return Err(Error::NegativeCoefficient { weight: w.to_string(), coefficient: m })
            }
            m => {
                debug_assert!(rs.is_dominant(&w));
                entries.insert(w, m as u64);
            }
        }
    }
    Ok(Decomposition { entries })
}

/// `V(mu) ⊗ V(nu)` by the Brauer–Klimyk rule.
pub fn tensor_decompose(rs: &RootSystem, mu: &Weight, nu: &Weight) -> Result<Decomposition> {
    require_dominant(rs, mu)?;
    require_dominant(rs, nu)?;
    let char_mu = weight_multiplicities(rs, mu)?;
    let char_nu = weight_multiplicities(rs, nu)?;
    // iterate over the smaller support, nu on ties
    let (fixed, iterated) = if char_mu.entries.len() < char_nu.entries.len() {
        (nu, &char_mu)
    } else {
        (mu, &char_nu)
    };
    let delta = rs.weyl_vector();
    let base = fixed + delta;
    let mut acc: HashMap<Weight, i64> = HashMap::new();
    for (lambda, &m) in &iterated.entries {
        let (sigma, steps) = rs.straighten(&(&base + lambda));
        if !rs.is_strictly_dominant(&sigma) {
            continue;
        }
        let signed = if steps % 2 == 0 { m as i64 } else { -(m as i64) };
        let e = acc.entry(&sigma - delta).or_insert(0);
        *e = e.checked_add(signed).ok_or(Error::Overflow("Klimyk accumulation"))?;
    }
    finish(rs, acc)
}

/// Decomposition of `V_Ĝ(nu_hat)` restricted to G.
pub fn branch(pair: &SphericalPair, nu_hat: &Weight) -> Result<Decomposition> {
    let amb = pair.amb();
    let sub = pair.sub();
    require_dominant(amb, nu_hat)?;

    // dominant part of the restricted character
    let mut restricted: HashMap<Weight, i64> = HashMap::new();
    for (chi, m) in dominant_multiplicities(amb, nu_hat)? {
        for x in amb.weyl_orbit(&chi) {
            let r = pair.restrict_unchecked(&x);
            if sub.is_dominant(&r) {
                let e = restricted.entry(r).or_insert(0);
                *e = e.checked_add(m as i64).ok_or(Error::Overflow("restricted character"))?;
            }
        }
    }

    let mut cache: HashMap<Weight, BTreeMap<Weight, u64>> = HashMap::new();
    let mut result: HashMap<Weight, i64> = HashMap::new();
    loop {
        let top = restricted
            .iter()
            .filter(|(_, &c)| c != 0)
            .map(|(w, _)| w)
            .max_by(|a, b| sub.height(a).cmp(&sub.height(b)).then_with(|| a.cmp(b)))
            .cloned();
        let Some(top) = top else { break };
        let c = restricted[&top];
        if c < 0 {
            return Err(Error::NegativeCoefficient { weight: top.to_string(), coefficient: c });
        }
        result.insert(top.clone(), c);
        if !cache.contains_key(&top) {
            cache.insert(top.clone(), dominant_multiplicities(sub, &top)?);
        }
        for (w, &m) in &cache[&top] {
            let e = restricted.entry(w.clone()).or_insert(0);
            *e = (m as i64)
                .checked_mul(c)
                .and_then(|x| e.checked_sub(x))
                .ok_or(Error::Overflow("character peeling"))?;
        }
        restricted.retain(|_, c| *c != 0);
    }
    finish(sub, result)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TagCount {
    pub tag: Theorem,
    /// Weights carrying the tag.
    pub count: usize,
    /// Weights carrying the tag and none of the earlier ones.
    pub new: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tags: Vec<TagCount>,
    pub generated: usize,
    pub truth: usize,
    /// Generated weights missing from the decomposition.
    pub violations: Vec<Weight>,
    pub coverage: f64,
}

impl VerificationReport {
    pub fn is_sound(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn new_counts(&self) -> Vec<usize> {
        self.tags.iter().map(|t| t.new).collect()
    }

    /// `14 +17 +2 +16 +9 = 58 / 83`
    pub fn tally(&self) -> String {
        let parts: Vec<String> = self
            .tags
            .iter()
            .enumerate()
            .map(|(i, t)| if i == 0 { t.new.to_string() } else { format!("+{}", t.new) })
            .collect();
        format!("{} = {} / {}", parts.join(" "), self.generated, self.truth)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<12} {:>6} {:>6}", "theorem", "count", "new")?;
        for t in &self.tags {
            writeln!(f, "{:<12} {:>6} {:>6}", t.tag.label(), t.count, t.new)?;
        }
        writeln!(f, "tally        {}", self.tally())?;
        writeln!(f, "coverage     {:.4}", self.coverage)?;
        if self.violations.is_empty() {
            writeln!(f, "violations   none")
        } else {
            let v: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
            writeln!(f, "violations   {}", v.join(" "))
        }
    }
}

/// Compares generated components with the true decomposition.
pub fn verify_components(generated: &[TaggedComponent], truth: &Decomposition) -> VerificationReport {
    let mut covered: BTreeSet<&Weight> = BTreeSet::new();
    let mut tags = Vec::new();
    for tag in Theorem::ALL {
        let with_tag: Vec<&Weight> =
            generated.iter().filter(|c| c.tags.contains(&tag)).map(|c| &c.weight).collect();
        let new = with_tag.iter().filter(|w| covered.insert(w)).count();
        tags.push(TagCount { tag, count: with_tag.len(), new });
    }
    let distinct: BTreeSet<&Weight> = generated.iter().map(|c| &c.weight).collect();
    let violations: Vec<Weight> =
        distinct.iter().filter(|w| !truth.contains(w)).map(|w| (*w).clone()).collect();
    let coverage = if truth.is_empty() { 0.0 } else { distinct.len() as f64 / truth.len() as f64 };
    VerificationReport { tags, generated: distinct.len(), truth: truth.len(), violations, coverage }
}
