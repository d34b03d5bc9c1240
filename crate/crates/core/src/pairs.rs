//! Spherical pairs of minimal rank `G ⊂ Ĝ`, consumed as validated data.
//!
//! A pair is given by the two root systems and the restriction map `rho`
//! from Ĝ-weights to G-weights (row-major, rows indexed by G coordinates).
//! Everything else is derived: the fibers of `rho` over the simple roots of
//! G, the split into one-element fibers (`Δ₁`) and two-element orthogonal
//! fibers (`Δ₂`), and the embedding of Weyl groups.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{GroupType, RootSystem, Weight, WeylWord};

/// Fibers of `rho` over the simple roots of G.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// `(alpha, alpha_hat_0)` for every `alpha` in `Δ₁`.
    pub delta1: Vec<(usize, usize)>,
    /// `(alpha, [alpha_hat_1, alpha_hat_2])` for every `alpha` in `Δ₂`.
    pub delta2: Vec<(usize, [usize; 2])>,
}

#[derive(Debug, Clone)]
pub struct SphericalPair {
    name: String,
    sub: RootSystem,
    amb: RootSystem,
    rho: Vec<Vec<i64>>,
    /// Indexed by G simple root; ascending Ĝ simple-root indices.
    fibers: Vec<Vec<usize>>,
    classification: Classification,
    diagonal: bool,
}

/// On-disk description of a pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDocument {
    pub sub_type: String,
    pub amb_type: String,
    pub rho: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "{status:4}  {:22} {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

fn apply_rho(rho: &[Vec<i64>], chi: &[i64]) -> Weight {
    Weight::new(
        rho.iter()
            .map(|row| {
                row.iter().zip(chi).try_fold(0i64, |acc, (&r, &x)| {
                    r.checked_mul(x).and_then(|p| acc.checked_add(p))
                })
                .expect("restriction overflow")
            })
            .collect(),
    )
}

/// Restriction matrix of the diagonal embedding `G ⊂ G×G`, with Ĝ coordinates
/// laid out as (first copy, second copy, first torus, second torus).
pub fn diagonal_rho(sub: &GroupType) -> Vec<Vec<i64>> {
    let s = sub.semisimple_rank();
    let t = sub.torus_rank;
    let cols = 2 * (s + t);
    let mut rho = vec![vec![0; cols]; s + t];
    for (i, row) in rho.iter_mut().enumerate().take(s) {
        row[i] = 1;
        row[s + i] = 1;
    }
    for k in 0..t {
        rho[s + k][2 * s + k] = 1;
        rho[s + k][2 * s + t + k] = 1;
    }
    rho
}

pub fn diagonal_type(sub: &GroupType) -> GroupType {
    let mut factors = sub.factors.clone();
    factors.extend(sub.factors.iter().copied());
    GroupType { factors, torus_rank: 2 * sub.torus_rank }
}

/// Fibers of `rho` over the simple roots of `sub`, or the first structural failure.
fn fibers(sub: &RootSystem, amb: &RootSystem, rho: &[Vec<i64>]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut fibers = vec![Vec::new(); sub.semisimple_rank()];
    let mut strays = Vec::new();
    for j in 0..amb.semisimple_rank() {
        let image = apply_rho(rho, amb.simple_root(j).coords());
        match (0..sub.semisimple_rank()).find(|&i| sub.simple_root(i) == image) {
            Some(i) => fibers[i].push(j),
            None => strays.push(j),
        }
    }
    (fibers, strays)
}

/// Computes the `Δ₁`/`Δ₂` split by restricting every simple root of Ĝ.
pub fn classify_simple_roots(
    sub: &RootSystem,
    amb: &RootSystem,
    rho: &[Vec<i64>],
) -> Result<Classification> {
    check_shape(sub, amb, rho)?;
    let invalid = |check: &str, detail: String| Error::InvalidPair { check: check.into(), detail };
    let (fibers, strays) = fibers(sub, amb, rho);
    if let Some(&j) = strays.first() {
        let image = apply_rho(rho, amb.simple_root(j).coords());
        return Err(invalid(
            "simple-roots-restrict",
            format!("rho(alpha_hat_{}) = {image} is not a simple root", j + 1),
        ));
    }
    let mut c = Classification { delta1: Vec::new(), delta2: Vec::new() };
    for (i, fiber) in fibers.iter().enumerate() {
        match fiber.as_slice() {
            [] => return Err(invalid("fibers-cover", format!("alpha_{} has empty fiber", i + 1))),
            &[a] => c.delta1.push((i, a)),
            &[a, b] => {
                if !amb.orthogonal_simple(a, b) {
                    return Err(invalid(
                        "fiber-orthogonality",
                        format!("fiber of alpha_{} is not orthogonal", i + 1),
                    ));
                }
                c.delta2.push((i, [a, b]));
            }
            _ => {
                return Err(invalid(
                    "fiber-size",
                    format!("alpha_{} has fiber of size {}", i + 1, fiber.len()),
                ))
            }
        }
    }
    Ok(c)
}

fn check_shape(sub: &RootSystem, amb: &RootSystem, rho: &[Vec<i64>]) -> Result<()> {
    if rho.len() != sub.rank() || rho.iter().any(|r| r.len() != amb.rank()) {
        return Err(Error::Parse(format!(
            "rho must be {}x{} (G rank x Ĝ rank), got {}x{}",
            sub.rank(),
            amb.rank(),
            rho.len(),
            rho.first().map_or(0, Vec::len)
        )));
    }
    Ok(())
}

/// Checks every structural consequence the generators rely on, on the
/// fundamental weights of Ĝ.
pub fn validate_pair(sub: &RootSystem, amb: &RootSystem, rho: &[Vec<i64>]) -> ValidationReport {
    let mut checks = Vec::new();
    let mut push = |name: &'static str, failures: Vec<String>, ok: String| {
        let passed = failures.is_empty();
        let detail = if passed { ok } else { failures.join("; ") };
        checks.push(Check { name, passed, detail });
    };

    if let Err(e) = check_shape(sub, amb, rho) {
        push("rho-shape", vec![e.to_string()], String::new());
        return ValidationReport { checks };
    }
    push("rho-shape", vec![], format!("{}x{}", rho.len(), amb.rank()));

    let (fibers, strays) = fibers(sub, amb, rho);
    push(
        "simple-roots-restrict",
        strays
            .iter()
            .map(|&j| {
                let image = apply_rho(rho, amb.simple_root(j).coords());
                format!("rho(alpha_hat_{}) = {image}", j + 1)
            })
            .collect(),
        "rho maps simple roots to simple roots".into(),
    );
    push(
        "fibers-cover",
        (0..fibers.len())
            .filter(|&i| fibers[i].is_empty())
            .map(|i| format!("alpha_{} not hit", i + 1))
            .collect(),
        "every simple root of G is hit".into(),
    );
    push(
        "fiber-size",
        (0..fibers.len())
            .filter(|&i| fibers[i].len() > 2)
            .map(|i| format!("alpha_{} has {} preimages", i + 1, fibers[i].len()))
            .collect(),
        "fibers have one or two elements".into(),
    );
    push(
        "fiber-orthogonality",
        (0..fibers.len())
            .filter(|&i| fibers[i].len() == 2 && !amb.orthogonal_simple(fibers[i][0], fibers[i][1]))
            .map(|i| format!("fiber of alpha_{} not orthogonal", i + 1))
            .collect(),
        "two-element fibers are orthogonal".into(),
    );

    // <rho(chi), alpha^vee> = sum over the fiber of <chi, alpha_hat^vee>
    let mut coroot = Vec::new();
    let mut compat = Vec::new();
    for k in 0..amb.rank() {
        let chi = amb.fundamental_weight(k);
        let r = apply_rho(rho, chi.coords());
        for (i, fiber) in fibers.iter().enumerate() {
            let lhs = r.coords()[i];
            let rhs: i64 = fiber.iter().map(|&j| chi.coords()[j]).sum();
            if lhs != rhs {
                let msg = format!(
                    "<rho(varpi_hat_{}), alpha_{}^v> = {lhs} but fiber sum = {rhs}",
                    k + 1,
                    i + 1
                );
                if fiber.len() == 1 {
                    compat.push(msg);
                } else {
                    coroot.push(msg);
                }
            }
        }
    }
    push("coroot-relation", coroot, "alpha^v = alpha_hat_1^v + alpha_hat_2^v on Δ₂".into());
    push("delta1-compatibility", compat, "alpha^v = alpha_hat_0^v on Δ₁".into());

    let mut intertwine = Vec::new();
    for k in 0..amb.rank() {
        let chi = amb.fundamental_weight(k);
        let r = apply_rho(rho, chi.coords());
        for (i, fiber) in fibers.iter().enumerate() {
            if fiber.is_empty() {
                continue;
            }
            let lifted = amb.apply_word(&chi, &WeylWord::new(fiber.clone()));
            let lhs = apply_rho(rho, lifted.coords());
            let mut rhs = r.clone();
            sub.reflect_in_place(&mut rhs, i);
            if lhs != rhs {
                intertwine.push(format!("s_{} at varpi_hat_{}", i + 1, k + 1));
            }
        }
    }
    push("weyl-intertwining", intertwine, "rho(embed(s)chi) = s rho(chi)".into());

    ValidationReport { checks }
}

impl SphericalPair {
    /// Builds and validates a pair; any failed check is reported as `InvalidPair`.
    pub fn new(name: impl Into<String>, sub: RootSystem, amb: RootSystem, rho: Vec<Vec<i64>>) -> Result<Self> {
        let report = validate_pair(&sub, &amb, &rho);
        if let Some(c) = report.first_failure() {
            if c.name == "rho-shape" {
                return Err(Error::Parse(c.detail.clone()));
            }
            return Err(Error::InvalidPair { check: c.name.into(), detail: c.detail.clone() });
        }
        let classification = classify_simple_roots(&sub, &amb, &rho)?;
        let (fibers, _) = fibers(&sub, &amb, &rho);
        let diagonal = amb.group_type() == &diagonal_type(sub.group_type()) && rho == diagonal_rho(sub.group_type());
        Ok(SphericalPair { name: name.into(), sub, amb, rho, fibers, classification, diagonal })
    }

    /// Diagonal `G ⊂ G×G`.
    pub fn diagonal(sub: GroupType) -> Self {
        let rho = diagonal_rho(&sub);
        let amb = diagonal_type(&sub);
        let name = format!("diag:{sub}");
        Self::new(name, RootSystem::new(sub), RootSystem::new(amb), rho)
            .expect("diagonal pairs are always valid")
    }

    /// `G₂ ⊂ Spin₇`, with `rho(varpi_hat_1) = varpi_1`, `rho(varpi_hat_2) = varpi_2`,
    /// `rho(varpi_hat_3) = varpi_1`.
    pub fn g2_spin7() -> Self {
        let rho = vec![vec![1, 0, 1], vec![0, 1, 0]];
        let sub = RootSystem::of("G2").expect("G2");
        let amb = RootSystem::of("B3").expect("B3");
        Self::new("g2-spin7", sub, amb, rho).expect("built-in pair is valid")
    }

    /// Looks up `g2-spin7` or `diag:<type>`.
    pub fn builtin(name: &str) -> Result<Self> {
        if name == "g2-spin7" {
            return Ok(Self::g2_spin7());
        }
        if let Some(t) = name.strip_prefix("diag:") {
            return Ok(Self::diagonal(t.parse()?));
        }
        Err(Error::Parse(format!("unknown built-in pair `{name}`")))
    }

    pub fn from_document(name: impl Into<String>, doc: &PairDocument) -> Result<Self> {
        let sub = RootSystem::of(&doc.sub_type)?;
        let amb = RootSystem::of(&doc.amb_type)?;
        Self::new(name, sub, amb, doc.rho.clone())
    }

    pub fn to_document(&self) -> PairDocument {
        PairDocument {
            sub_type: self.sub.group_type().to_string(),
            amb_type: self.amb.group_type().to_string(),
            rho: self.rho.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn sub(&self) -> &RootSystem {
        &self.sub
    }

    pub fn amb(&self) -> &RootSystem {
        &self.amb
    }

    pub fn rho(&self) -> &[Vec<i64>] {
        &self.rho
    }

    pub fn is_diagonal(&self) -> bool {
        self.diagonal
    }

    pub fn classification(&self) -> &Classification {
        &self.classification
    }

    pub fn delta2(&self) -> &[(usize, [usize; 2])] {
        &self.classification.delta2
    }

    pub fn delta1(&self) -> &[(usize, usize)] {
        &self.classification.delta1
    }

    pub fn fiber(&self, alpha: usize) -> &[usize] {
        &self.fibers[alpha]
    }

    pub fn validate(&self) -> ValidationReport {
        validate_pair(&self.sub, &self.amb, &self.rho)
    }

    /// `rho(chi_hat)`.
    pub fn restrict(&self, chi: &Weight) -> Result<Weight> {
        if chi.len() != self.amb.rank() {
            return Err(Error::DimensionMismatch { expected: self.amb.rank(), got: chi.len() });
        }
        Ok(self.restrict_unchecked(chi))
    }

    pub(crate) fn restrict_unchecked(&self, chi: &Weight) -> Weight {
        apply_rho(&self.rho, chi.coords())
    }

    /// Image of a word of W in Ŵ, letter by letter.
    pub fn embed_weyl(&self, u: &WeylWord) -> WeylWord {
        WeylWord::new(u.letters().iter().flat_map(|&i| self.fibers[i].iter().copied()).collect())
    }

    /// Splits a Ĝ-weight of a diagonal pair into its two G-weights.
    pub fn split_diagonal(&self, chi: &Weight) -> Result<(Weight, Weight)> {
        if !self.diagonal {
            return Err(Error::NotDiagonalPair);
        }
        if chi.len() != self.amb.rank() {
            return Err(Error::DimensionMismatch { expected: self.amb.rank(), got: chi.len() });
        }
        let s = self.sub.semisimple_rank();
        let t = self.sub.group_type().torus_rank;
        let c = chi.coords();
        let mut mu = c[..s].to_vec();
        mu.extend_from_slice(&c[2 * s..2 * s + t]);
        let mut nu = c[s..2 * s].to_vec();
        nu.extend_from_slice(&c[2 * s + t..]);
        Ok((Weight::new(mu), Weight::new(nu)))
    }

    /// Inverse of [`split_diagonal`](Self::split_diagonal).
    pub fn join_diagonal(&self, mu: &Weight, nu: &Weight) -> Result<Weight> {
        if !self.diagonal {
            return Err(Error::NotDiagonalPair);
        }
        for w in [mu, nu] {
            if w.len() != self.sub.rank() {
                return Err(Error::DimensionMismatch { expected: self.sub.rank(), got: w.len() });
            }
        }
        let s = self.sub.semisimple_rank();
        let mut c = mu.coords()[..s].to_vec();
        c.extend_from_slice(&nu.coords()[..s]);
        c.extend_from_slice(&mu.coords()[s..]);
        c.extend_from_slice(&nu.coords()[s..]);
        Ok(Weight::new(c))
    }
}

/// Parses a JSON pair document and validates it.
pub fn load_pair(json: &str) -> Result<SphericalPair> {
    let doc: PairDocument = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    SphericalPair::from_document("file", &doc)
}

/// Names accepted by [`SphericalPair::builtin`] that are worth listing.
pub const BUILTIN_EXAMPLES: &[&str] = &[
    "g2-spin7",
    "diag:A1",
    "diag:A2",
    "diag:A1xA1",
    "diag:B2",
    "diag:B3",
    "diag:C3",
    "diag:D4",
    "diag:G2",
];
