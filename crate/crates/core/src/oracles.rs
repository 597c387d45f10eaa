//! Independent cross-checks.  Everything in this module recomputes results
//! of the main modules by a different route — exhaustive enumeration where
//! the main code uses a formula, explicit pole scanning where the main code
//! uses interval arithmetic, symbolic Gamma shifts where the main code uses
//! a product formula — so that agreement is meaningful.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::weights::Weight;
use crate::weyl::Perm;

/// All minimal-length representatives of `(n, N-n)` by filtering the full
/// symmetric group.  Bounded at `N <= 10`.
pub fn brute_kostant(big_n: usize, n: usize) -> Result<Vec<Perm>> {
    if big_n > 10 {
        return Err(Error::TooLarge(format!("N = {big_n} > 10")));
    }
    if n > big_n {
        return Err(Error::Invalid(format!("block {n} exceeds rank {big_n}")));
    }
    let blocks = [n, big_n - n];
    let mut out = Vec::new();
    let mut line: Vec<usize> = (1..=big_n).collect();
    loop {
        let w = Perm::from_one_line(&line)?;
        if w.is_kostant(&blocks) {
            out.push(w);
        }
        if !next_permutation(&mut line) {
            break;
        }
    }
    out.sort();
    Ok(out)
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Result of the exhaustive balanced search: per embedding, the unique
/// permutation sorting the shifted coordinates (absent when they collide)
/// with its length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteBalance {
    pub collision: bool,
    pub perms: Vec<Perm>,
    pub lengths: Vec<u64>,
}

/// Walk the whole symmetric group looking for `w` such that
/// `w^{-1} . (mu (x) mu')` is dominant.  Bounded at `n + n' <= 9`.
pub fn brute_balanced(mu: &Weight, mup: &Weight) -> Result<BruteBalance> {
    if mu.degree() != mup.degree() {
        return Err(Error::DegreeMismatch);
    }
    let big_n = mu.rank() + mup.rank();
    if big_n > 9 {
        return Err(Error::TooLarge(format!("N = {big_n} > 9")));
    }
    let mut perms = Vec::new();
    let mut lengths = Vec::new();
    for t in 0..mu.degree() {
        let concat: Vec<i64> = mu.coords()[t]
            .iter()
            .chain(mup.coords()[t].iter())
            .copied()
            .collect();
        let mut found: Vec<Perm> = Vec::new();
        let mut line: Vec<usize> = (1..=big_n).collect();
        loop {
            let w = Perm::from_one_line(&line)?;
            let y = w.inverse().dot(&concat);
            if y.windows(2).all(|p| p[0] >= p[1]) {
                found.push(w);
            }
            if !next_permutation(&mut line) {
                break;
            }
        }
        match found.len() {
            0 => {
                return Ok(BruteBalance { collision: true, perms: vec![], lengths: vec![] });
            }
            1 => {
                let w = found.pop().unwrap();
                lengths.push(w.length());
                perms.push(w);
            }
            _ => {
                return Err(Error::Invalid(
                    "sorting permutation is not unique; dot-regularity violated".into(),
                ));
            }
        }
    }
    Ok(BruteBalance { collision: false, perms, lengths })
}

/// One archimedean factor: `Gamma_C(s + off/2)` or `Gamma_R(s + off/2)`,
/// offset doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Factor {
    C(i64),
    R(i64),
}

/// Build the factor list of `L(s, pair)` at one embedding by tensoring the
/// parameter multisets outright: every index pair `(i, j)` contributes the
/// sum `ell_i + ell'_j`; matched `+k/-k` sums collapse to `Gamma_C` factors
/// and the lone unmatched zero of an odd-by-odd pair becomes the
/// `Gamma_R(s + eps0 + d' - d)` factor.
fn factor_list(mu: &Weight, mup: &Weight, eps0: Option<u8>, tau: usize) -> Result<Vec<Factor>> {
    let cp = mu.cuspidal_params()?;
    let cq = mup.cuspidal_params()?;
    let both_odd = mu.rank() % 2 == 1 && mup.rank() % 2 == 1;
    let d2p = -(mu.d_minus_d_doubled(mup)?); // 2(d' - d)
    let mut sums: Vec<i64> = cp.ell[tau]
        .iter()
        .flat_map(|&x| cq.ell[tau].iter().map(move |&y| x + y))
        .collect();
    sums.sort_unstable();
    let zeros = sums.iter().filter(|&&s| s == 0).count();
    let mut factors = Vec::new();
    for &k in sums.iter().filter(|&&s| s > 0) {
        factors.push(Factor::C(d2p + k));
    }
    if both_odd {
        let e = eps0.ok_or(Error::Invalid("sign eps0 required when both ranks are odd".into()))?;
        if e > 1 {
            return Err(Error::Invalid("eps0 must be 0 or 1".into()));
        }
        factors.push(Factor::R(d2p + 2 * e as i64));
        debug_assert!(zeros % 2 == 1);
        for _ in 0..(zeros - 1) / 2 {
            factors.push(Factor::C(d2p));
        }
    } else {
        debug_assert!(zeros % 2 == 0);
        for _ in 0..zeros / 2 {
            factors.push(Factor::C(d2p));
        }
    }
    Ok(factors)
}

fn has_pole_at_doubled(f: Factor, s2: i64) -> bool {
    match f {
        // Gamma_C poles at 0, -1, -2, ...
        Factor::C(off2) => {
            let a2 = s2 + off2;
            a2 <= 0 && a2 % 2 == 0
        }
        // Gamma_R poles at 0, -2, -4, ...
        Factor::R(off2) => {
            let a2 = s2 + off2;
            a2 <= 0 && a2.rem_euclid(4) == 0
        }
    }
}

/// Scan a doubled window for critical points: points `m` of the parity
/// class of `(n + n')/2` such that neither the factor of the pair at
/// `s = m` nor that of the dual pair at `s = 1 - m` has a pole.
pub fn gamma_pole_scan(
    mu: &Weight,
    mup: &Weight,
    eps0: Option<u8>,
    window_doubled: (i64, i64),
) -> Result<Vec<i64>> {
    if mu.degree() != mup.degree() {
        return Err(Error::DegreeMismatch);
    }
    let parity = ((mu.rank() + mup.rank()) % 2) as i64;
    let mut forward = Vec::new();
    let mut reflected = Vec::new();
    for t in 0..mu.degree() {
        forward.extend(factor_list(mu, mup, eps0, t)?);
        // the dual pair has the same parameters with d and d' exchanged
        reflected.extend(factor_list(mup, mu, eps0, t)?);
    }
    let (lo, hi) = window_doubled;
    let mut out = Vec::new();
    for m2 in lo..=hi {
        if m2.rem_euclid(2) != parity {
            continue;
        }
        let ok = forward.iter().all(|&f| !has_pole_at_doubled(f, m2))
            && reflected.iter().all(|&f| !has_pole_at_doubled(f, 2 - m2));
        if ok {
            out.push(m2);
        }
    }
    Ok(out)
}

/// Ratio of a factor list between the two near-central points, evaluated by
/// symbolic Gamma shifts: `Gamma_C(x)/Gamma_C(x+1) = 2 pi / x` via
/// `Gamma(x+1) = x Gamma(x)`.  Returns the rational parts per embedding and
/// the common exponent of `2 pi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicRatio {
    pub per_place: Vec<BigRational>,
    pub exponent_per_place: u64,
}

pub fn gamma_ratio_symbolic(mu: &Weight, mup: &Weight) -> Result<SymbolicRatio> {
    if (mu.rank() * mup.rank()) % 2 == 1 {
        return Err(Error::OddDimension);
    }
    let big_n = (mu.rank() + mup.rank()) as i64;
    let mut per_place = Vec::new();
    let mut exponent = None;
    for t in 0..mu.degree() {
        let factors = factor_list(mu, mup, None, t)?;
        let mut r = BigRational::one();
        let mut e = 0u64;
        for f in factors {
            match f {
                Factor::C(off2) => {
                    // Gamma_C(-N/2 + off/2) / Gamma_C(1 - N/2 + off/2)
                    let x2 = -big_n + off2;
                    if x2 <= 0 {
                        return Err(Error::NotCritical);
                    }
                    debug_assert_eq!(x2 % 2, 0);
                    // 2 (2pi)^{-x} Gamma(x) / (2 (2pi)^{-x-1} Gamma(x+1))
                    //   = (2pi) / x
                    r *= BigRational::new(BigInt::from(2), BigInt::from(x2));
                    e += 1;
                }
                Factor::R(_) => unreachable!("even pair has no Gamma_R factor"),
            }
        }
        match exponent {
            None => exponent = Some(e),
            Some(prev) => debug_assert_eq!(prev, e),
        }
        per_place.push(r);
    }
    Ok(SymbolicRatio {
        per_place,
        exponent_per_place: exponent.unwrap_or(0),
    })
}

/// Coefficient list of the Gaussian binomial `[n choose k]_q`, lowest degree
/// first: the length generating function of the minimal-coset enumeration.
/// Computed by the Pascal recurrence
/// `[n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q`.
pub fn gaussian_binomial(n: usize, k: usize) -> Vec<u64> {
    if k > n {
        return vec![0];
    }
    if k == 0 || k == n {
        return vec![1];
    }
    let a = gaussian_binomial(n - 1, k - 1);
    let b = gaussian_binomial(n - 1, k);
    let mut out = vec![0u64; (k * (n - k)) + 1];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i + k] += c;
    }
    out
}
