//! Symmetric-group combinatorics: permutations, minimal-length coset
//! representatives for block parabolics, the dot action, and the search for
//! a representative of balanced length attached to a pair of weights.
//!
//! Conventions, fixed once and used everywhere:
//!
//! - a permutation `w` acts on coordinate vectors by `(w . x)_i = x_{w^{-1}(i)}`;
//! - composition is `(w1 * w2)(i) = w1(w2(i))`;
//! - `length(w)` is the inversion count of the one-line notation;
//! - `w` is a minimal-length (Kostant) representative for the block
//!   composition `(s_1, ..., s_k)` exactly when the one-line notation of
//!   `w^{-1}` is increasing inside each block of positions.

use itertools::Itertools;
use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::weights::{rho_doubled, Weight};

/// A permutation of `{0, ..., n-1}` in one-line notation: `map[i] = w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    map: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { map: (0..n).collect() }
    }

    /// Build from 1-based one-line notation.
    pub fn from_one_line(one_line: &[usize]) -> Result<Perm> {
        let n = one_line.len();
        let mut map = vec![usize::MAX; n];
        for (i, &v) in one_line.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::Invalid(format!("entry {v} out of range 1..={n}")));
            }
            map[i] = v - 1;
        }
        let mut seen = vec![false; n];
        for &v in &map {
            if seen[v] {
                return Err(Error::Invalid("one-line notation repeats a value".into()));
            }
            seen[v] = true;
        }
        Ok(Perm { map })
    }

    /// 0-based constructor; private because external callers speak 1-based.
    fn from_map(map: Vec<usize>) -> Perm {
        debug_assert!({
            let mut s = map.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Perm { map }
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v + 1).collect()
    }

    /// `w(i)` with 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Perm { map: inv }
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm::from_map(other.map.iter().map(|&v| self.map[v]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Coxeter length = number of inversions of the one-line notation.
    pub fn length(&self) -> u64 {
        let mut inv = 0;
        for i in 0..self.map.len() {
            for j in i + 1..self.map.len() {
                if self.map[i] > self.map[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `(w . x)_i = x_{w^{-1}(i)}`.
    pub fn permute<T: Clone>(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.n());
        let inv = self.inverse();
        inv.map.iter().map(|&j| x[j].clone()).collect()
    }

    /// Minimal-length representative test for a block composition.
    pub fn is_kostant(&self, blocks: &[usize]) -> bool {
        if blocks.iter().sum::<usize>() != self.n() {
            return false;
        }
        let inv = self.inverse();
        let mut start = 0;
        for &s in blocks {
            if inv.map[start..start + s].windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            start += s;
        }
        true
    }

    /// Integral dot action `(w . lam)_i = lam_{w^{-1}(i)} + i - w^{-1}(i)`
    /// (1-based indices), i.e. `w(lam + rho) - rho` without half-integers.
    pub fn dot(&self, lam: &[i64]) -> Vec<i64> {
        assert_eq!(lam.len(), self.n());
        let inv = self.inverse();
        inv.map
            .iter()
            .enumerate()
            .map(|(i, &j)| lam[j] + i as i64 - j as i64)
            .collect()
    }

    /// Dot action on rational coordinates, same formula.
    pub fn dot_rational(&self, lam: &[Rational64]) -> Vec<Rational64> {
        assert_eq!(lam.len(), self.n());
        let inv = self.inverse();
        inv.map
            .iter()
            .enumerate()
            .map(|(i, &j)| lam[j] + Rational64::from_integer(i as i64 - j as i64))
            .collect()
    }
}

/// The longest element `i -> n + 1 - i`.
pub fn longest_element(n: usize) -> Perm {
    Perm::from_map((0..n).rev().collect())
}

/// Longest element of the Levi factor: reversal inside each block.
pub fn levi_longest(blocks: &[usize]) -> Perm {
    let n: usize = blocks.iter().sum();
    let mut map = vec![0; n];
    let mut start = 0;
    for &s in blocks {
        for t in 0..s {
            map[start + t] = start + s - 1 - t;
        }
        start += s;
    }
    Perm::from_map(map)
}

/// The permutation moving block `k` to where block `K+1-k` sits, preserving
/// the order inside each block.  For a two-block composition `(n, n')` this
/// is `i -> i + n'` on the first block and `n + j -> j` on the second; its
/// length is the product of the two block sizes.
pub fn block_swap(blocks: &[usize]) -> Perm {
    let n: usize = blocks.iter().sum();
    let k = blocks.len();
    // offset[j] = start of the destination of block j (destination slots are
    // laid out in reversed block order).
    let mut dest_start = vec![0usize; k];
    let mut acc = 0;
    for j in (0..k).rev() {
        dest_start[j] = acc;
        acc += blocks[j];
    }
    let mut map = vec![0; n];
    let mut start = 0;
    for (j, &s) in blocks.iter().enumerate() {
        for t in 0..s {
            map[start + t] = dest_start[j] + t;
        }
        start += s;
    }
    Perm::from_map(map)
}

/// A tuple of Kostant representatives for a fixed block composition, one
/// permutation per embedding of the base field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KostantElement {
    big_n: usize,
    blocks: Vec<usize>,
    perms: Vec<Perm>,
}

impl KostantElement {
    pub fn new(blocks: Vec<usize>, perms: Vec<Perm>) -> Result<Self> {
        let big_n: usize = blocks.iter().sum();
        if perms.is_empty() {
            return Err(Error::Invalid("need at least one embedding".into()));
        }
        for p in &perms {
            if p.n() != big_n {
                return Err(Error::RankMismatch { expected: big_n, got: p.n() });
            }
            if !p.is_kostant(&blocks) {
                return Err(Error::NotKostant);
            }
        }
        Ok(KostantElement { big_n, blocks, perms })
    }

    pub fn rank(&self) -> usize {
        self.big_n
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn degree(&self) -> usize {
        self.perms.len()
    }

    pub fn lengths(&self) -> Vec<u64> {
        self.perms.iter().map(Perm::length).collect()
    }

    /// Dot action on a rank-`N` weight over the same field.
    pub fn dot(&self, lam: &Weight) -> Result<Weight> {
        if lam.rank() != self.big_n {
            return Err(Error::RankMismatch { expected: self.big_n, got: lam.rank() });
        }
        if lam.degree() != self.perms.len() {
            return Err(Error::DegreeMismatch);
        }
        let coords = self
            .perms
            .iter()
            .zip(lam.coords())
            .map(|(p, c)| p.dot(c))
            .collect();
        Weight::new(self.big_n, lam.degree(), coords)
    }

    /// For a two-block representative `w` of `(n, n')`, the representative
    /// `w_P * w` of the swapped composition `(n', n)`.  Lengths of `w` and
    /// its image sum to `n * n'` at every embedding.
    pub fn to_associate(&self) -> Result<KostantElement> {
        let [n, np] = self.pair()?;
        let swap = block_swap(&self.blocks);
        let perms: Vec<Perm> = self.perms.iter().map(|p| swap.compose(p)).collect();
        let out = KostantElement::new(vec![np, n], perms)?;
        debug_assert!(self
            .perms
            .iter()
            .zip(&out.perms)
            .all(|(a, b)| a.length() + b.length() == (n * np) as u64));
        Ok(out)
    }

    /// For a two-block representative `w`, the representative
    /// `w_M * w * w_G` of the same composition that governs the
    /// contragredient weight.  Lengths again sum to `n * n'`.
    pub fn to_dual(&self) -> Result<KostantElement> {
        let [n, np] = self.pair()?;
        let w_m = levi_longest(&self.blocks);
        let w_g = longest_element(self.big_n);
        let perms: Vec<Perm> = self
            .perms
            .iter()
            .map(|p| w_m.compose(p).compose(&w_g))
            .collect();
        let out = KostantElement::new(self.blocks.clone(), perms)?;
        debug_assert!(self
            .perms
            .iter()
            .zip(&out.perms)
            .all(|(a, b)| a.length() + b.length() == (n * np) as u64));
        Ok(out)
    }

    fn pair(&self) -> Result<[usize; 2]> {
        match self.blocks[..] {
            [n, np] => Ok([n, np]),
            _ => Err(Error::ShapeMismatch(
                "operation needs a two-block composition".into(),
            )),
        }
    }
}

/// All minimal-length representatives for the maximal parabolic `(n, N-n)`,
/// single embedding, sorted by one-line notation.  There are `C(N, n)` of
/// them: one per `n`-subset `S` of values, with `w^{-1} = sorted(S) ++
/// sorted(complement)`.
pub fn kostant_reps(big_n: usize, n: usize) -> Result<Vec<Perm>> {
    if n > big_n {
        return Err(Error::Invalid(format!("block {n} exceeds rank {big_n}")));
    }
    let mut out: Vec<Perm> = (0..big_n)
        .combinations(n)
        .map(|s| {
            let mut inv_line = s.clone();
            inv_line.extend((0..big_n).filter(|v| !s.contains(v)));
            Perm::from_map(inv_line).inverse()
        })
        .collect();
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BalanceStatus {
    /// Every embedding contributes length exactly `n n' / 2`.
    Balanced,
    /// A unique representative exists but some length is off-center.
    Unbalanced,
    /// Two shifted coordinates collide; no representative exists.
    Collision,
}

/// Outcome of [`find_balanced`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedSearch {
    pub status: BalanceStatus,
    /// The unique two-block representative, absent on collision.
    pub element: Option<KostantElement>,
    /// Per-embedding lengths, empty on collision.
    pub lengths: Vec<u64>,
    /// The dominant weight `lam` with `w . lam = mu (x) mu'`, absent on
    /// collision.  Always integral.
    pub dominant_lambda: Option<Weight>,
}

/// Search for the Kostant representative `w` of `(n, n')` with
/// `w . lam = mu (x) mu'` for a dominant `lam`, and test whether its length
/// is `n n' / 2` at every embedding.
///
/// `mu` and `mu'` must be dominant (purity is *not* required here; the
/// search is purely combinatorial).  When `n n'` is odd and the shifted
/// coordinates are distinct, no balanced length can exist and the call fails
/// with [`Error::OddDimension`]; a collision is reported as a normal
/// outcome, since it is the interesting degenerate case.
pub fn find_balanced(mu: &Weight, mup: &Weight) -> Result<BalancedSearch> {
    if mu.degree() != mup.degree() {
        return Err(Error::DegreeMismatch);
    }
    if !mu.is_dominant() || !mup.is_dominant() {
        return Err(Error::Invalid("both weights must be dominant".into()));
    }
    let n = mu.rank();
    let np = mup.rank();
    let big_n = n + np;
    let rho2 = rho_doubled(big_n);

    let mut perms = Vec::new();
    let mut lengths = Vec::new();
    let mut lam_coords = Vec::new();
    let mut collision = false;

    for t in 0..mu.degree() {
        // doubled shifted coordinates of mu (x) mu' + rho
        let mut x2: Vec<i64> = Vec::with_capacity(big_n);
        for (i, &b) in mu.coords()[t].iter().chain(mup.coords()[t].iter()).enumerate() {
            x2.push(2 * b + rho2[i]);
        }
        let mut sorted: Vec<i64> = x2.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            collision = true;
            break;
        }
        // w(i) = position of the i-th largest value
        let mut order: Vec<usize> = (0..big_n).collect();
        order.sort_by_key(|&i| -x2[i]);
        let w = Perm::from_map(order);
        lengths.push(w.length());
        let lam: Vec<i64> = sorted
            .iter()
            .enumerate()
            .map(|(i, &v)| (v - rho2[i]) / 2)
            .collect();
        debug_assert!(sorted.iter().enumerate().all(|(i, &v)| (v - rho2[i]) % 2 == 0));
        lam_coords.push(lam);
        perms.push(w);
    }

    if collision {
        return Ok(BalancedSearch {
            status: BalanceStatus::Collision,
            element: None,
            lengths: Vec::new(),
            dominant_lambda: None,
        });
    }
    if (n * np) % 2 == 1 {
        return Err(Error::OddDimension);
    }
    let half = (n * np / 2) as u64;
    let status = if lengths.iter().all(|&l| l == half) {
        BalanceStatus::Balanced
    } else {
        BalanceStatus::Unbalanced
    };
    let element = KostantElement::new(vec![n, np], perms)?;
    let lam = Weight::new(big_n, mu.degree(), lam_coords)?;
    debug_assert_eq!(element.dot(&lam)?.coords()[0][..n], mu.coords()[0][..]);
    Ok(BalancedSearch {
        status,
        element: Some(element),
        lengths,
        dominant_lambda: Some(lam),
    })
}

/// The interleaving representative for the equal-block composition
/// `(u, ..., u)` (`v` blocks): `w(j + (i-1)v) = i + (j-1)u` for
/// `1 <= j <= v`, `1 <= i <= u`, together with its reflection
/// `w_P * w` by the block swap of the composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterleavingData {
    pub w: Perm,
    pub w_reflected: Perm,
    pub blocks: Vec<usize>,
    pub length: u64,
    pub reflected_length: u64,
    /// `N (u-1)(v-1) / 4` when that is an integer.
    pub predicted_length: Option<u64>,
    /// `N (u-1)(v-1)`, always defined.
    pub predicted_length_times_four: u64,
}

pub fn interleaving(u: usize, v: usize) -> Result<InterleavingData> {
    if u == 0 || v == 0 {
        return Err(Error::Invalid("block sizes must be positive".into()));
    }
    let big_n = u * v;
    let mut map = vec![0usize; big_n];
    for i in 1..=u {
        for j in 1..=v {
            map[(j + (i - 1) * v) - 1] = (i + (j - 1) * u) - 1;
        }
    }
    let w = Perm::from_map(map);
    let blocks = vec![u; v];
    debug_assert!(w.is_kostant(&blocks));
    let w_reflected = block_swap(&blocks).compose(&w);
    let length = w.length();
    let reflected_length = w_reflected.length();
    let p4 = (big_n * (u - 1) * (v - 1)) as u64;
    let predicted_length = if p4 % 4 == 0 { Some(p4 / 4) } else { None };
    Ok(InterleavingData {
        w,
        w_reflected,
        blocks,
        length,
        reflected_length,
        predicted_length,
        predicted_length_times_four: p4,
    })
}

/// Outcome of [`delta_coefficient_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaCoefficientReport {
    pub holds: bool,
    /// `d_i - d_{i+1}` of the block means of `w . lam`, when constant.
    pub step: Option<Rational64>,
    /// Same for the reflected representative.
    pub reflected_step: Option<Rational64>,
    pub vacuous: bool,
}

/// Dot-act the interleaving representative and its reflection on
/// `lam = sum_i a_i gamma_{iv} + d delta_N` (symmetric coefficients
/// `a_i = a_{u-i}`) and inspect the result blockwise: all `v` blocks of size
/// `u` must carry the same semi-simple component for both representatives,
/// and the block means must march in constant steps `-(u-1)` and `-(u+1)`
/// respectively (equivalently `u-1` and `u+1` when the blocks are labelled
/// in the opposite order).
pub fn delta_coefficient_check(
    u: usize,
    v: usize,
    a: &[i64],
    d: Rational64,
) -> Result<DeltaCoefficientReport> {
    if u == 0 || v == 0 {
        return Err(Error::Invalid("block sizes must be positive".into()));
    }
    if a.len() + 1 != u {
        return Err(Error::ShapeMismatch(format!(
            "need {} coefficients for u = {u}, got {}",
            u - 1,
            a.len()
        )));
    }
    if (0..a.len()).any(|i| a[i] != a[a.len() - 1 - i]) {
        return Err(Error::ShapeMismatch("coefficients must be symmetric".into()));
    }
    if u == 1 || v == 1 {
        return Ok(DeltaCoefficientReport {
            holds: true,
            step: None,
            reflected_step: None,
            vacuous: true,
        });
    }

    let big_n = u * v;
    let n_rat = Rational64::from_integer(big_n as i64);
    // standard coordinates of sum a_i gamma_{iv} + d delta_N
    let mut lam = vec![d; big_n];
    for (idx, &ai) in a.iter().enumerate() {
        let m = (idx + 1) * v;
        let shift = Rational64::new((m as i64) * ai, 1) / n_rat;
        for (k, entry) in lam.iter_mut().enumerate() {
            if k < m {
                *entry += Rational64::from_integer(ai);
            }
            *entry -= shift;
        }
    }

    let data = interleaving(u, v)?;
    let analyse = |p: &Perm| -> (bool, Option<Rational64>, Vec<Rational64>) {
        let y = p.dot_rational(&lam);
        let blocks: Vec<&[Rational64]> = y.chunks(u).collect();
        let semis: Vec<Vec<Rational64>> = blocks
            .iter()
            .map(|b| b.windows(2).map(|w| w[0] - w[1]).collect())
            .collect();
        let semi_ok = semis.iter().all(|s| *s == semis[0]);
        let means: Vec<Rational64> = blocks
            .iter()
            .map(|b| b.iter().copied().sum::<Rational64>() / Rational64::from_integer(u as i64))
            .collect();
        let steps: Vec<Rational64> = means.windows(2).map(|w| w[0] - w[1]).collect();
        let step = if steps.iter().all(|s| *s == steps[0]) {
            Some(steps[0])
        } else {
            None
        };
        (semi_ok, step, semis[0].clone())
    };

    let (semi_w, step_w, semi_vec_w) = analyse(&data.w);
    let (semi_r, step_r, semi_vec_r) = analyse(&data.w_reflected);
    let expected_w = Rational64::from_integer(-(u as i64 - 1));
    let expected_r = Rational64::from_integer(-(u as i64 + 1));
    let holds = semi_w
        && semi_r
        && semi_vec_w == semi_vec_r
        && step_w == Some(expected_w)
        && step_r == Some(expected_r);
    Ok(DeltaCoefficientReport {
        holds,
        step: step_w,
        reflected_step: step_r,
        vacuous: false,
    })
}
