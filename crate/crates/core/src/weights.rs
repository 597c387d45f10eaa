//! Highest weights of `GL(n)` over a totally real field of degree `r`.
//!
//! A weight is a tuple of integer vectors `b^tau = (b_1 >= ... >= b_n)`, one
//! per real embedding `tau`.  The fundamental-basis coordinates are the
//! differences `a_i - 1 = b_i - b_{i+1}` together with the mean
//! `d = (b_1 + ... + b_n)/n`; the dictionary in both directions is exact.

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A weight in standard coordinates, one integer vector per embedding.
///
/// Construction checks only the shape (every embedding has the same rank
/// `n >= 1`, and there is at least one embedding); dominance and purity are
/// predicates, not invariants, because dual / twisted / dot-acted weights
/// routinely pass through non-dominant territory.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    n: usize,
    r: usize,
    coords: Vec<Vec<i64>>,
}

/// Fundamental-basis coordinates: `a^tau` (length `n-1`, integers for
/// integral weights) plus the rational mean `d^tau` and the derived lowest
/// coordinate `r_lambda^tau`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalCoords {
    pub a: Vec<Vec<i64>>,
    pub d: Vec<Rational64>,
    pub r_lambda: Vec<Rational64>,
}

/// Archimedean (cuspidal) parameters of a pure dominant weight.
///
/// Per embedding, `ell_1 = a_1 + ... + a_{n-1}` and
/// `ell_{j+1} = ell_j - 2 a_j`; the list is strictly decreasing and
/// antisymmetric (`ell_i = -ell_{n+1-i}`).  All entries share the parity of
/// `motivic_weight`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspidalParams {
    /// `ell^tau`, one strictly decreasing integer vector per embedding.
    pub ell: Vec<Vec<i64>>,
    /// `max_tau ell_1^tau`.
    pub motivic_weight: i64,
    /// Twice the purity mean `d` (an integer for pure weights).
    pub purity_weight_doubled: i64,
}

impl Weight {
    pub fn new(n: usize, r: usize, coords: Vec<Vec<i64>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("rank must be at least 1".into()));
        }
        if r == 0 || coords.len() != r {
            return Err(Error::Invalid(format!(
                "expected {r} embedding vectors, got {}",
                coords.len()
            )));
        }
        for c in &coords {
            if c.len() != n {
                return Err(Error::RankMismatch { expected: n, got: c.len() });
            }
        }
        Ok(Weight { n, r, coords })
    }

    /// Convenience constructor for a single embedding (`r = 1`).
    pub fn single(coords: Vec<i64>) -> Result<Self> {
        let n = coords.len();
        Weight::new(n, 1, vec![coords])
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Degree of the base field (number of real embeddings).
    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn coords(&self) -> &[Vec<i64>] {
        &self.coords
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| c.windows(2).all(|w| w[0] >= w[1]))
    }

    /// Twice the mean of the coordinates at embedding `tau`, times `n`
    /// divided out exactly when possible: returns `sum * 2 / n` as a
    /// rational.  Doubling keeps the common half-integral case in `i64`.
    fn d_tau(&self, tau: usize) -> Rational64 {
        let s: i64 = self.coords[tau].iter().sum();
        Rational64::new(s, self.n as i64)
    }

    /// All per-embedding means agree.
    pub fn is_algebraic(&self) -> bool {
        (1..self.r).all(|t| self.d_tau(t) == self.d_tau(0))
    }

    /// Algebraic, and there is a single integer `w` with
    /// `b_i + b_{n+1-i} = w` for every `i` and every embedding.
    pub fn is_pure(&self) -> bool {
        if !self.is_algebraic() {
            return false;
        }
        let w = self.coords[0][0] + self.coords[0][self.n - 1];
        self.coords
            .iter()
            .all(|c| (0..self.n).all(|i| c[i] + c[self.n - 1 - i] == w))
    }

    /// The integer `w = 2d` of a pure weight.
    pub fn purity_weight(&self) -> Result<i64> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(self.coords[0][0] + self.coords[0][self.n - 1])
    }

    pub fn to_fundamental(&self) -> FundamentalCoords {
        let a = self
            .coords
            .iter()
            .map(|c| (0..self.n - 1).map(|i| c[i] - c[i + 1] + 1).collect())
            .collect();
        let d = (0..self.r).map(|t| self.d_tau(t)).collect();
        let r_lambda = self
            .coords
            .iter()
            .map(|c| Rational64::from_integer(c[self.n - 1]))
            .collect();
        FundamentalCoords { a, d, r_lambda }
    }

    /// Archimedean parameters.  Requires a pure dominant weight.
    pub fn cuspidal_params(&self) -> Result<CuspidalParams> {
        if !self.is_dominant() {
            return Err(Error::Invalid("weight is not dominant".into()));
        }
        let w2 = self.purity_weight()?;
        let mut ell = Vec::with_capacity(self.r);
        for c in &self.coords {
            let a: Vec<i64> = (0..self.n - 1).map(|i| c[i] - c[i + 1] + 1).collect();
            let mut l = Vec::with_capacity(self.n);
            l.push(a.iter().sum::<i64>());
            for j in 0..self.n - 1 {
                l.push(l[j] - 2 * a[j]);
            }
            debug_assert!(l.windows(2).all(|p| p[0] > p[1]));
            debug_assert!((0..self.n).all(|i| l[i] == -l[self.n - 1 - i]));
            ell.push(l);
        }
        let motivic_weight = ell.iter().map(|l| l[0]).max().unwrap();
        Ok(CuspidalParams { ell, motivic_weight, purity_weight_doubled: w2 })
    }

    /// The contragredient: reverse and negate each coordinate vector.
    pub fn dual(&self) -> Weight {
        let coords = self
            .coords
            .iter()
            .map(|c| c.iter().rev().map(|x| -x).collect())
            .collect();
        Weight { n: self.n, r: self.r, coords }
    }

    /// Twist by the `m`-th power of the norm: subtract `m` everywhere.
    /// Leaves the cuspidal parameters untouched and drops `d` by `m`.
    pub fn tate_twist(&self, m: i64) -> Weight {
        let coords = self
            .coords
            .iter()
            .map(|c| c.iter().map(|x| x - m).collect())
            .collect();
        Weight { n: self.n, r: self.r, coords }
    }

    /// Doubled difference of the purity means, `2(d - d')`.  Both weights
    /// must be pure and live over the same field.
    pub fn d_minus_d_doubled(&self, other: &Weight) -> Result<i64> {
        if self.r != other.r {
            return Err(Error::DegreeMismatch);
        }
        Ok(self.purity_weight()? - other.purity_weight()?)
    }

    /// Width `min |ell_i - ell'_j|` over all index pairs and embeddings.
    /// Zero exactly when the parameters collide somewhere.
    pub fn cuspidal_width(&self, other: &Weight) -> Result<i64> {
        if self.r != other.r {
            return Err(Error::DegreeMismatch);
        }
        let p = self.cuspidal_params()?;
        let q = other.cuspidal_params()?;
        let mut best = i64::MAX;
        for t in 0..self.r {
            for &x in &p.ell[t] {
                for &y in &q.ell[t] {
                    best = best.min((x - y).abs());
                }
            }
        }
        Ok(best)
    }

    /// Restricted width for a pair of odd ranks `n, n' >= 3`: the minimum of
    /// `|ell_i - ell'_j|` over the strictly positive halves
    /// `i <= (n-1)/2`, `j <= (n'-1)/2` only.
    pub fn cuspidal_width_plus(&self, other: &Weight) -> Result<i64> {
        if self.r != other.r {
            return Err(Error::DegreeMismatch);
        }
        if self.n % 2 == 0 || other.n % 2 == 0 {
            return Err(Error::NotOddOdd);
        }
        if self.n == 1 || other.n == 1 {
            return Err(Error::DegenerateIndexRange);
        }
        let p = self.cuspidal_params()?;
        let q = other.cuspidal_params()?;
        let mut best = i64::MAX;
        for t in 0..self.r {
            for &x in &p.ell[t][..(self.n - 1) / 2] {
                for &y in &q.ell[t][..(other.n - 1) / 2] {
                    best = best.min((x - y).abs());
                }
            }
        }
        Ok(best)
    }
}

impl FundamentalCoords {
    /// Number of embeddings.
    pub fn degree(&self) -> usize {
        self.d.len()
    }

    /// The three integrality conditions for rank `n`: the `a_i` are integers
    /// (guaranteed by the type), `n * d` is an integer, and
    /// `n*d - sum_i i*(a_i - 1)` is divisible by `n`.
    pub fn is_integral(&self, n: usize) -> bool {
        let n_i = n as i64;
        self.a.iter().zip(&self.d).all(|(a, d)| {
            let nd = *d * n_i;
            if !nd.is_integer() {
                return false;
            }
            let s: i64 = a.iter().enumerate().map(|(i, ai)| (i as i64 + 1) * (ai - 1)).sum();
            (nd.to_integer() - s) % n_i == 0
        })
    }

    /// Rebuild the standard coordinates for rank `n`.  Fails with
    /// [`Error::NonIntegralResult`] when the lowest coordinate
    /// `r_lambda = d - (sum_i i*(a_i-1))/n` is not an integer.
    pub fn to_weight(&self, n: usize) -> Result<Weight> {
        let r = self.d.len();
        if r == 0 || self.a.len() != r {
            return Err(Error::Invalid("embedding counts disagree".into()));
        }
        let n_i = n as i64;
        let mut coords = Vec::with_capacity(r);
        for (a, d) in self.a.iter().zip(&self.d) {
            if a.len() + 1 != n {
                return Err(Error::RankMismatch { expected: n, got: a.len() + 1 });
            }
            let s: i64 = a.iter().enumerate().map(|(i, ai)| (i as i64 + 1) * (ai - 1)).sum();
            let r_lam = *d - Rational64::new(s, n_i);
            if !r_lam.is_integer() {
                return Err(Error::NonIntegralResult);
            }
            let b_n = r_lam.to_integer();
            let mut b = vec![0i64; n];
            b[n - 1] = b_n;
            for j in (0..n - 1).rev() {
                b[j] = b[j + 1] + a[j] - 1;
            }
            coords.push(b);
        }
        Weight::new(n, r, coords)
    }
}

impl CuspidalParams {
    pub fn rank(&self) -> usize {
        self.ell[0].len()
    }

    /// `sum_tau`-free sanity identity `2d = sum (a_i - 1) + 2 r_lambda`
    /// specializes to: every entry shares the parity of the motivic weight.
    pub fn parity_consistent(&self) -> bool {
        let p = self.motivic_weight.rem_euclid(2);
        self.ell.iter().flatten().all(|l| l.rem_euclid(2) == p)
    }
}

/// `rho_n` doubled: `2 rho = (n-1, n-3, ..., 1-n)`.
pub fn rho_doubled(n: usize) -> Vec<i64> {
    (0..n).map(|i| n as i64 - 1 - 2 * i as i64).collect()
}

/// Zero weight of rank `n` over a degree-`r` field.
pub fn zero_weight(n: usize, r: usize) -> Weight {
    Weight::new(n, r, vec![vec![0; n]; r]).expect("shape is valid")
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (t, c) in self.coords.iter().enumerate() {
            if t > 0 {
                write!(f, " | ")?;
            }
            write!(f, "({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))?;
        }
        Ok(())
    }
}

/// Render a rational as an exact fraction string, `"p/q"` or plain `"p"`.
pub fn fraction_string(x: Rational64) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Render a doubled integer `2x` as the exact value of `x`.
pub fn doubled_string(doubled: i64) -> String {
    fraction_string(Rational64::new(doubled, 2))
}

/// Parse `"p"` or `"p/q"` into a rational.
pub fn parse_fraction(s: &str) -> Result<Rational64> {
    let bad = || Error::Invalid(format!("cannot parse fraction {s:?}"));
    match s.split_once('/') {
        None => {
            let p: i64 = s.trim().parse().map_err(|_| bad())?;
            Ok(Rational64::from_integer(p))
        }
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational64::new(p, q))
        }
    }
}
