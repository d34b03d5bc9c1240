//! Root systems and Weyl groups of connected reductive groups.
//!
//! Everything is expressed in the basis of fundamental weights with exact
//! 64-bit integers, so the pairing of a weight with the simple coroot
//! `alpha_i^vee` is just its `i`-th coordinate. Simple roots are numbered as
//! in Bourbaki's tables; indices in this API are zero-based, so Bourbaki's
//! `alpha_1` is index `0`.
//!
//! A reductive group is a product of simple factors and a central torus.
//! The simple factors own the leading coordinates, block by block; torus
//! coordinates come last and are left alone by every reflection.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One simple factor, with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
}

impl SimpleType {
    pub fn rank(&self) -> usize {
        match *self {
            SimpleType::A(n) | SimpleType::B(n) | SimpleType::C(n) | SimpleType::D(n) => n,
            SimpleType::G2 => 2,
        }
    }

    /// Cartan matrix with entry `(i, j) = <alpha_i, alpha_j^vee>`.
    fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        match *self {
            SimpleType::G2 => {
                a[0][1] = -1;
                a[1][0] = -3;
            }
            SimpleType::A(_) | SimpleType::B(_) | SimpleType::C(_) => {
                for i in 0..n.saturating_sub(1) {
                    a[i][i + 1] = -1;
                    a[i + 1][i] = -1;
                }
                match *self {
                    // alpha_n short
                    SimpleType::B(_) => a[n - 2][n - 1] = -2,
                    // alpha_n long
                    SimpleType::C(_) => a[n - 1][n - 2] = -2,
                    _ => {}
                }
            }
            SimpleType::D(_) => {
                for i in 0..n - 2 {
                    a[i][i + 1] = -1;
                    a[i + 1][i] = -1;
                }
                a[n - 3][n - 1] = -1;
                a[n - 1][n - 3] = -1;
            }
        }
        a
    }

    /// Half squared lengths `(alpha_i, alpha_i) / 2`, normalized so short roots have 1.
    fn symmetrizer(&self) -> Vec<i64> {
        let n = self.rank();
        match *self {
            SimpleType::A(_) | SimpleType::D(_) => vec![1; n],
            SimpleType::B(_) => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                d
            }
            SimpleType::C(_) => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                d
            }
            SimpleType::G2 => vec![1, 3],
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SimpleType::A(n) => write!(f, "A{n}"),
            SimpleType::B(n) => write!(f, "B{n}"),
            SimpleType::C(n) => write!(f, "C{n}"),
            SimpleType::D(n) => write!(f, "D{n}"),
            SimpleType::G2 => write!(f, "G2"),
        }
    }
}

/// Type of a reductive group: simple factors plus a central torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupType {
    pub factors: Vec<SimpleType>,
    pub torus_rank: usize,
}

impl GroupType {
    pub fn semisimple_rank(&self) -> usize {
        self.factors.iter().map(SimpleType::rank).sum()
    }

    pub fn rank(&self) -> usize {
        self.semisimple_rank() + self.torus_rank
    }
}

impl FromStr for GroupType {
    type Err = Error;

    /// Parses names like `G2`, `B3`, `C3xC3`, `A1xA1`, `A2xT1`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownType(s.to_string());
        let mut factors = Vec::new();
        let mut torus_rank = 0;
        for part in s.split(['x', '×', '*']) {
            let part = part.trim();
            if part.is_empty() {
                return Err(unknown());
            }
            let (letter, digits) = part.split_at(1);
            let n: usize = digits.parse().map_err(|_| unknown())?;
            let factor = match letter.to_ascii_uppercase().as_str() {
                "A" if n >= 1 => SimpleType::A(n),
                "B" if n >= 2 => SimpleType::B(n),
                "C" if n >= 2 => SimpleType::C(n),
                "D" if n >= 3 => SimpleType::D(n),
                "G" if n == 2 => SimpleType::G2,
                "T" if n >= 1 => {
                    torus_rank += n;
                    continue;
                }
                _ => return Err(unknown()),
            };
            factors.push(factor);
        }
        if factors.is_empty() && torus_rank == 0 {
            return Err(unknown());
        }
        Ok(GroupType { factors, torus_rank })
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        if self.torus_rank > 0 {
            parts.push(format!("T{}", self.torus_rank));
        }
        write!(f, "{}", parts.join("x"))
    }
}

/// Integer weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Weight(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `self - k * other`, panicking on overflow.
    pub fn sub_multiple(&self, k: i64, other: &Weight) -> Weight {
        debug_assert_eq!(self.len(), other.len());
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| {
                    k.checked_mul(b)
                        .and_then(|kb| a.checked_sub(kb))
                        .expect("weight arithmetic overflow")
                })
                .collect(),
        )
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(
            self.0
                .iter()
                .map(|&a| a.checked_mul(k).expect("weight arithmetic overflow"))
                .collect(),
        )
    }

    /// Concatenation, the weight of a product group.
    pub fn concat(&self, other: &Weight) -> Weight {
        let mut c = self.0.clone();
        c.extend_from_slice(&other.0);
        Weight(c)
    }

    pub fn split_at(&self, mid: usize) -> (Weight, Weight) {
        let (a, b) = self.0.split_at(mid);
        (Weight(a.to_vec()), Weight(b.to_vec()))
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.to_vec())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `2,1,0` or `(2,1,0)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Err(Error::Parse(format!("empty weight `{s}`")));
        }
        t.split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad coordinate `{c}` in `{s}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.len(), rhs.len());
        Weight(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(&a, &b)| a.checked_add(b).expect("weight arithmetic overflow"))
                .collect(),
        )
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.len(), rhs.len());
        Weight(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(&a, &b)| a.checked_sub(b).expect("weight arithmetic overflow"))
                .collect(),
        )
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

/// Word in the simple reflections. The rightmost letter acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Word for the inverse element.
    pub fn inverse(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    /// `s_i * self`: the new letter acts last.
    pub fn left_mul(&self, i: usize) -> WeylWord {
        let mut l = Vec::with_capacity(self.0.len() + 1);
        l.push(i);
        l.extend_from_slice(&self.0);
        WeylWord(l)
    }

    pub fn then(&self, other: &WeylWord) -> WeylWord {
        let mut l = self.0.clone();
        l.extend_from_slice(&other.0);
        WeylWord(l)
    }
}

impl fmt::Display for WeylWord {
    /// Bourbaki labels, e.g. `s1s3`; `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for &i in &self.0 {
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// A root, with its coordinates in the simple-root basis, as a weight, and
/// its coroot in the simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub simple_coords: Vec<i64>,
    pub weight: Weight,
    pub coroot: Vec<i64>,
}

impl Root {
    pub fn is_positive(&self) -> bool {
        self.simple_coords.iter().all(|&c| c >= 0)
    }

    pub fn is_simple(&self) -> Option<usize> {
        let mut idx = None;
        for (i, &c) in self.simple_coords.iter().enumerate() {
            match c {
                0 => {}
                1 if idx.is_none() => idx = Some(i),
                _ => return None,
            }
        }
        idx
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    group_type: GroupType,
    rank: usize,
    ss_rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    /// Positive roots first, sorted by height; then their negatives in the same order.
    roots: Vec<Root>,
    root_lookup: HashMap<Weight, usize>,
    cartan_inverse: Vec<Vec<Ratio<i64>>>,
    weyl_vector: Weight,
}

impl RootSystem {
    pub fn new(group_type: GroupType) -> Self {
        let ss_rank = group_type.semisimple_rank();
        let rank = group_type.rank();
        let mut cartan = vec![vec![0i64; ss_rank]; ss_rank];
        let mut symmetrizer = Vec::with_capacity(ss_rank);
        let mut offset = 0;
        for factor in &group_type.factors {
            let block = factor.cartan();
            for (i, row) in block.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    cartan[offset + i][offset + j] = v;
                }
            }
            symmetrizer.extend(factor.symmetrizer());
            offset += factor.rank();
        }
        let cartan_inverse = invert(&cartan);
        let mut weyl_vector = vec![0; rank];
        weyl_vector[..ss_rank].fill(1);

        let mut rs = RootSystem {
            group_type,
            rank,
            ss_rank,
            cartan,
            symmetrizer,
            roots: Vec::new(),
            root_lookup: HashMap::new(),
            cartan_inverse,
            weyl_vector: Weight(weyl_vector),
        };
        rs.build_roots();
        rs
    }

    fn build_roots(&mut self) {
        let n = self.ss_rank;
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
        while let Some(c) = queue.pop_front() {
            for j in 0..n {
                let p: i64 = (0..n).map(|k| c[k] * self.cartan[k][j]).sum();
                if p != 0 {
                    let mut r = c.clone();
                    r[j] -= p;
                    if seen.insert(r.clone()) {
                        queue.push_back(r);
                    }
                }
            }
        }
        let mut positive: Vec<Vec<i64>> =
            seen.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        positive.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));

        let make = |c: Vec<i64>| self.make_root(c);
        let mut roots: Vec<Root> = positive.iter().cloned().map(make).collect();
        let negatives: Vec<Root> = positive
            .iter()
            .map(|c| self.make_root(c.iter().map(|x| -x).collect()))
            .collect();
        roots.extend(negatives);
        self.root_lookup = roots.iter().enumerate().map(|(i, r)| (r.weight.clone(), i)).collect();
        self.roots = roots;
    }

    fn make_root(&self, c: Vec<i64>) -> Root {
        let n = self.ss_rank;
        let mut w = vec![0i64; self.rank];
        for k in 0..n {
            for j in 0..n {
                w[j] += c[k] * self.cartan[k][j];
            }
        }
        // (beta, beta) = sum_{k,l} c_k c_l A_kl d_l
        let mut norm2 = 0i64;
        for k in 0..n {
            for l in 0..n {
                norm2 += c[k] * c[l] * self.cartan[k][l] * self.symmetrizer[l];
            }
        }
        let half = norm2 / 2;
        let coroot = (0..n)
            .map(|k| {
                let num = c[k] * self.symmetrizer[k];
                assert_eq!(num % half, 0, "non-integral coroot coefficient");
                num / half
            })
            .collect();
        Root { simple_coords: c, weight: Weight(w), coroot }
    }

    /// Parses a type name such as `C3` or `C3xC3` and builds its root system.
    pub fn of(name: &str) -> Result<Self> {
        Ok(Self::new(name.parse()?))
    }

    pub fn group_type(&self) -> &GroupType {
        &self.group_type
    }

    /// Total rank, torus included.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.ss_rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// The Weyl vector: 1 on every simple coordinate, 0 on the torus.
    pub fn weyl_vector(&self) -> &Weight {
        &self.weyl_vector
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.roots.len() / 2]
    }

    /// All roots; index `i + N` is the negative of positive root `i`.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root_index(&self, weight: &Weight) -> Option<usize> {
        self.root_lookup.get(weight).copied()
    }

    pub fn simple_root_index(&self, i: usize) -> usize {
        self.root_lookup[&self.simple_root(i)]
    }

    /// Simple root `alpha_i` as a weight: row `i` of the Cartan matrix.
    pub fn simple_root(&self, i: usize) -> Weight {
        let mut w = vec![0; self.rank];
        w[..self.ss_rank].copy_from_slice(&self.cartan[i]);
        Weight(w)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::unit(self.rank, i)
    }

    pub fn orthogonal_simple(&self, i: usize, j: usize) -> bool {
        self.cartan[i][j] == 0
    }

    fn check_dim(&self, w: &Weight) -> Result<()> {
        if w.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: w.len() });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.ss_rank {
            return Err(Error::IndexOutOfRange { index: i, rank: self.ss_rank });
        }
        Ok(())
    }

    /// `<lambda, alpha_i^vee>`.
    pub fn pairing(&self, lambda: &Weight, i: usize) -> Result<i64> {
        self.check_index(i)?;
        self.check_dim(lambda)?;
        Ok(lambda.0[i])
    }

    /// `s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i`.
    pub fn reflect(&self, lambda: &Weight, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        self.check_dim(lambda)?;
        let mut out = lambda.clone();
        self.reflect_in_place(&mut out, i);
        Ok(out)
    }

    pub(crate) fn reflect_in_place(&self, lambda: &mut Weight, i: usize) {
        let p = lambda.0[i];
        if p == 0 {
            return;
        }
        for (c, &a) in lambda.0.iter_mut().zip(&self.cartan[i]) {
            *c = p.checked_mul(a).and_then(|pa| c.checked_sub(pa)).expect("weight arithmetic overflow");
        }
    }

    /// Applies a word; the rightmost letter acts first.
    ///
    /// Panics if a letter is not a simple-root index of this system.
    pub fn apply_word(&self, lambda: &Weight, u: &WeylWord) -> Weight {
        let mut out = lambda.clone();
        for &i in u.0.iter().rev() {
            self.reflect_in_place(&mut out, i);
        }
        out
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.0[..self.ss_rank].iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self, lambda: &Weight) -> bool {
        lambda.0[..self.ss_rank].iter().all(|&c| c > 0)
    }

    /// Straightens `lambda` into the dominant chamber, returning the dominant
    /// weight and the number of simple reflections used.
    pub fn straighten(&self, lambda: &Weight) -> (Weight, usize) {
        let mut out = lambda.clone();
        let mut steps = 0;
        while let Some(i) = out.0[..self.ss_rank].iter().position(|&c| c < 0) {
            self.reflect_in_place(&mut out, i);
            steps += 1;
        }
        (out, steps)
    }

    /// The dominant weight in the orbit of `lambda`, and a word sending `lambda` to it.
    pub fn dominant_representative(&self, lambda: &Weight) -> (Weight, WeylWord) {
        let mut out = lambda.clone();
        let mut letters = Vec::new();
        while let Some(i) = out.0[..self.ss_rank].iter().position(|&c| c < 0) {
            self.reflect_in_place(&mut out, i);
            letters.push(i);
        }
        letters.reverse();
        (out, WeylWord(letters))
    }

    pub fn dominant(&self, lambda: &Weight) -> Weight {
        self.straighten(lambda).0
    }

    /// Orbit points paired with a shortest word reaching each from `lambda`,
    /// in breadth-first order.
    pub fn orbit_with_words(&self, lambda: &Weight) -> Vec<(Weight, WeylWord)> {
        let mut seen: HashSet<Weight> = HashSet::new();
        let mut out = vec![(lambda.clone(), WeylWord::identity())];
        seen.insert(lambda.clone());
        let mut head = 0;
        while head < out.len() {
            let (x, word) = out[head].clone();
            head += 1;
            for i in 0..self.ss_rank {
                if x.0[i] == 0 {
                    continue;
                }
                let mut y = x.clone();
                self.reflect_in_place(&mut y, i);
                if seen.insert(y.clone()) {
                    out.push((y, word.left_mul(i)));
                }
            }
        }
        out
    }

    /// The Weyl orbit of `lambda` in breadth-first order from `lambda`.
    pub fn weyl_orbit(&self, lambda: &Weight) -> Vec<Weight> {
        self.orbit_with_words(lambda).into_iter().map(|(w, _)| w).collect()
    }

    /// One shortest word for every element of W, in order of length.
    pub fn weyl_elements(&self) -> Vec<WeylWord> {
        self.orbit_with_words(&self.weyl_vector).into_iter().map(|(_, u)| u).collect()
    }

    pub fn weyl_group_order(&self) -> usize {
        self.weyl_orbit(&self.weyl_vector).len()
    }

    /// Acts on a root given by index, returning the index of the image.
    pub fn act_on_root(&self, u: &WeylWord, root: usize) -> usize {
        let image = self.apply_word(&self.roots[root].weight, u);
        self.root_lookup[&image]
    }

    /// Length of the group element represented by `u`: the number of positive
    /// roots `gamma` with `u^{-1} gamma` negative.
    pub fn length(&self, u: &WeylWord) -> usize {
        let inv = u.inverse();
        self.positive_roots()
            .iter()
            .filter(|g| !self.roots[self.act_on_root(&inv, self.root_lookup[&g.weight])].is_positive())
            .count()
    }

    /// A reduced word for the longest element `w0`.
    pub fn longest_element(&self) -> WeylWord {
        // walk delta to -delta, always reflecting a positive coordinate
        let mut x = self.weyl_vector.clone();
        let mut letters = Vec::new();
        while let Some(i) = x.0[..self.ss_rank].iter().position(|&c| c > 0) {
            self.reflect_in_place(&mut x, i);
            letters.push(i);
        }
        letters.reverse();
        WeylWord(letters)
    }

    /// `<lambda, beta^vee>` for an arbitrary root.
    pub fn coroot_pairing(&self, lambda: &Weight, root: &Root) -> i64 {
        root.coroot.iter().zip(&lambda.0).map(|(&c, &x)| c * x).sum()
    }

    /// `s_beta(lambda)` for an arbitrary root.
    pub fn reflect_by_root(&self, lambda: &Weight, root: &Root) -> Weight {
        lambda.sub_multiple(self.coroot_pairing(lambda, root), &root.weight)
    }

    /// Coordinates of the semisimple part of `lambda` in the simple-root basis.
    pub fn to_root_coords(&self, lambda: &Weight) -> Vec<Ratio<i64>> {
        (0..self.ss_rank)
            .map(|k| (0..self.ss_rank).map(|j| self.cartan_inverse[j][k] * lambda.0[j]).sum())
            .collect()
    }

    /// Integer simple-root coordinates, if `lambda` lies in the root lattice
    /// (torus part zero).
    pub fn root_lattice_coords(&self, lambda: &Weight) -> Option<Vec<i64>> {
        if lambda.0[self.ss_rank..].iter().any(|&c| c != 0) {
            return None;
        }
        self.to_root_coords(lambda)
            .into_iter()
            .map(|r| r.is_integer().then(|| r.to_integer()))
            .collect()
    }

    /// Sum of the simple-root coordinates; strictly increasing along positive roots.
    pub fn height(&self, lambda: &Weight) -> Ratio<i64> {
        self.to_root_coords(lambda).into_iter().sum()
    }

    /// Invariant form `(x, lambda)` for `x` given in simple-root coordinates.
    pub fn form(&self, root_coords: &[i64], lambda: &Weight) -> i64 {
        root_coords
            .iter()
            .zip(&self.symmetrizer)
            .zip(&lambda.0)
            .map(|((&c, &d), &x)| c * d * x)
            .sum()
    }

    /// Largest size of a set of pairwise orthogonal simple roots drawn from `pool`.
    pub fn max_orthogonal_subset(&self, pool: &[usize]) -> usize {
        orthogonal_subsets(self, pool, pool.len()).iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// All nonempty subsets of `pool` of size at most `max` whose members are
/// pairwise orthogonal simple roots.
pub fn orthogonal_subsets(rs: &RootSystem, pool: &[usize], max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn go(
        rs: &RootSystem,
        pool: &[usize],
        start: usize,
        max: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for k in start..pool.len() {
            let a = pool[k];
            if stack.iter().all(|&b| rs.orthogonal_simple(a, b) && rs.orthogonal_simple(b, a)) {
                stack.push(a);
                out.push(stack.clone());
                if stack.len() < max {
                    go(rs, pool, k + 1, max, stack, out);
                }
                stack.pop();
            }
        }
    }
    if max > 0 {
        go(rs, pool, 0, max, &mut stack, &mut out);
    }
    out
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> =
        m.iter().map(|row| row.iter().map(|&x| Ratio::from_integer(x)).collect()).collect();
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| (0..n).map(|j| Ratio::from_integer(i64::from(i == j))).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != Ratio::from_integer(0)).expect("singular Cartan matrix");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != Ratio::from_integer(0) {
                    for j in 0..n {
                        let (ac, ic) = (a[col][j], inv[col][j]);
                        a[r][j] -= f * ac;
                        inv[r][j] -= f * ic;
                    }
                }
            }
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w<const N: usize>(c: [i64; N]) -> Weight {
        Weight::from(c)
    }

    #[test]
    fn pairing_reads_coordinates() {
        let g2 = RootSystem::of("G2").unwrap();
        assert_eq!(g2.pairing(&w([3, 2]), 0).unwrap(), 3);
        assert_eq!(g2.pairing(&w([0, 0]), 1).unwrap(), 0);
        let b3 = RootSystem::of("B3").unwrap();
        assert_eq!(b3.pairing(&w([2, 2, 1]), 2).unwrap(), 1);
        assert!(matches!(g2.pairing(&w([1, 1]), 2), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(g2.pairing(&w([1, 1, 1]), 0), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn reflect_examples() {
        let g2 = RootSystem::of("G2").unwrap();
        assert_eq!(g2.reflect(&w([3, 2]), 0).unwrap(), w([-3, 5]));
        assert_eq!(g2.reflect(&w([0, 4]), 0).unwrap(), w([0, 4]));
        let a1 = RootSystem::of("A1").unwrap();
        assert_eq!(a1.reflect(&w([5]), 0).unwrap(), w([-5]));
        assert!(g2.reflect(&w([1, 1]), 7).is_err());
    }

    #[test]
    fn apply_word_examples() {
        let a1 = RootSystem::of("A1").unwrap();
        assert_eq!(a1.apply_word(&w([1]), &WeylWord::new(vec![0, 0])), w([1]));
        assert_eq!(a1.apply_word(&w([4]), &WeylWord::identity()), w([4]));
        let b3 = RootSystem::of("B3").unwrap();
        assert_eq!(b3.apply_word(&w([2, 2, 1]), &WeylWord::new(vec![0])), w([-2, 4, 1]));
        // rightmost acts first
        let g2 = RootSystem::of("G2").unwrap();
        let x = g2.apply_word(&w([3, 2]), &WeylWord::new(vec![1, 0]));
        let y = g2.reflect(&g2.reflect(&w([3, 2]), 0).unwrap(), 1).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn dominant_representative_examples() {
        let a1 = RootSystem::of("A1").unwrap();
        assert_eq!(a1.dominant_representative(&w([-3])), (w([3]), WeylWord::new(vec![0])));
        let g2 = RootSystem::of("G2").unwrap();
        assert_eq!(g2.dominant_representative(&w([3, 2])), (w([3, 2]), WeylWord::identity()));
        let (d, u) = g2.dominant_representative(&w([-3, 5]));
        assert_eq!(d, w([3, 2]));
        assert_eq!(g2.apply_word(&w([-3, 5]), &u), d);
    }

    #[test]
    fn root_counts_and_cartan_rows() {
        for (name, n, order) in [
            ("A1", 1, 2),
            ("A2", 3, 6),
            ("G2", 6, 12),
            ("B3", 9, 48),
            ("C3", 9, 48),
            ("D4", 12, 192),
            ("A1xA1", 2, 4),
            ("C3xC3", 18, 2304),
        ] {
            let rs = RootSystem::of(name).unwrap();
            assert_eq!(rs.positive_roots().len(), n, "{name}");
            assert_eq!(rs.weyl_group_order(), order, "{name}");
            for i in 0..rs.semisimple_rank() {
                assert_eq!(rs.cartan()[i][i], 2);
                assert_eq!(rs.roots()[rs.simple_root_index(i)].is_simple(), Some(i));
            }
        }
        let g2 = RootSystem::of("G2").unwrap();
        assert_eq!(g2.simple_root(0), w([2, -1]));
        assert_eq!(g2.simple_root(1), w([-3, 2]));
        let b3 = RootSystem::of("B3").unwrap();
        assert_eq!(b3.simple_root(1), w([-1, 2, -2]));
        let c3 = RootSystem::of("C3").unwrap();
        assert_eq!(c3.simple_root(2), w([0, -2, 2]));
    }

    #[test]
    fn orbits() {
        let a1 = RootSystem::of("A1").unwrap();
        let mut o = a1.weyl_orbit(&w([2]));
        o.sort();
        assert_eq!(o, vec![w([-2]), w([2])]);
        let g2 = RootSystem::of("G2").unwrap();
        assert_eq!(g2.weyl_orbit(&w([0, 0])), vec![w([0, 0])]);
        let b3 = RootSystem::of("B3").unwrap();
        assert_eq!(b3.weyl_orbit(&w([1, 0, 0])).len(), 6);
        assert_eq!(g2.weyl_orbit(&w([1, 1])).len(), 12);
    }

    #[test]
    fn lengths_and_longest_element() {
        let g2 = RootSystem::of("G2").unwrap();
        assert_eq!(g2.length(&WeylWord::identity()), 0);
        assert_eq!(g2.length(&WeylWord::new(vec![1, 1])), 0);
        let w0 = g2.longest_element();
        assert_eq!(g2.length(&w0), 6);

        let a1 = RootSystem::of("A1").unwrap();
        assert_eq!(a1.longest_element(), WeylWord::new(vec![0]));
        let a1a1 = RootSystem::of("A1xA1").unwrap();
        let mut l = a1a1.longest_element().letters().to_vec();
        l.sort();
        assert_eq!(l, vec![0, 1]);

        let c3 = RootSystem::of("C3").unwrap();
        let w0 = c3.longest_element();
        assert_eq!(w0.len(), 9);
        assert_eq!(c3.length(&w0), 9);
        for i in 0..3 {
            let f = c3.fundamental_weight(i);
            assert_eq!(c3.apply_word(&f, &w0), -&f);
        }
    }

    #[test]
    fn coroots_of_g2() {
        let g2 = RootSystem::of("G2").unwrap();
        // highest root 3a1+2a2 is long; its coroot is a1v+2a2v
        let top = g2.positive_roots().last().unwrap();
        assert_eq!(top.simple_coords, vec![3, 2]);
        assert_eq!(top.coroot, vec![1, 2]);
        for r in g2.roots() {
            assert_eq!(g2.coroot_pairing(&r.weight, r), 2);
            assert_eq!(g2.reflect_by_root(&r.weight, r), -&r.weight);
        }
    }

    #[test]
    fn torus_coordinates_are_inert() {
        let rs = RootSystem::of("A1xT1").unwrap();
        assert_eq!(rs.rank(), 2);
        assert_eq!(rs.reflect(&w([3, 7]), 0).unwrap(), w([-3, 7]));
        assert_eq!(rs.weyl_orbit(&w([1, -4])).len(), 2);
    }

    #[test]
    fn parse_types() {
        assert_eq!("C3xC3".parse::<GroupType>().unwrap().to_string(), "C3xC3");
        assert!("E6".parse::<GroupType>().is_err());
        assert!("G3".parse::<GroupType>().is_err());
        assert!("".parse::<GroupType>().is_err());
        assert_eq!("(2,-1,0)".parse::<Weight>().unwrap(), w([2, -1, 0]));
        assert!("2,a".parse::<Weight>().is_err());
    }
}
