//! Hodge types, Γ-factor inventories, and critical sets.
//!
//! The effective motive attached to a pure dominant weight of rank `n` and
//! motivic weight `w` has Hodge types `((ell_i + w)/2, (w - ell_i)/2)`; the
//! tensor product of two such motives has types indexed by pairs `(i, j)`.
//! Criticality is a statement about poles of products of `Gamma_C` and
//! `Gamma_R` factors at a point and its reflection `s -> 1 - s`; everything
//! below manipulates the doubled integer offsets of those factors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::weights::Weight;
use crate::weyl::{find_balanced, BalanceStatus, BalancedSearch};

/// Hodge types per embedding plus the common purity weight `p + q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeSet {
    /// One multiset of `(p, q)` pairs per embedding, sorted by descending `p`.
    pub pairs: Vec<Vec<(i64, i64)>>,
    pub purity_weight: i64,
}

/// A finite set of critical points, stored doubled.  All points share one
/// parity: even entries are integers, odd entries are half-integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalSet {
    doubled: Vec<i64>,
}

impl CriticalSet {
    pub fn from_doubled(mut doubled: Vec<i64>) -> Result<Self> {
        doubled.sort_unstable();
        doubled.dedup();
        if let Some(&first) = doubled.first() {
            if doubled.iter().any(|p| (p - first) % 2 != 0) {
                return Err(Error::Invalid("critical points of mixed parity".into()));
            }
        }
        Ok(CriticalSet { doubled })
    }

    pub fn doubled_points(&self) -> &[i64] {
        &self.doubled
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn contains_doubled(&self, m2: i64) -> bool {
        self.doubled.binary_search(&m2).is_ok()
    }

    /// `0` for integer points, `1` for half-integer points.
    pub fn parity_doubled(&self) -> Option<u8> {
        self.doubled.first().map(|p| p.rem_euclid(2) as u8)
    }

    /// Consecutive points differ by one (doubled: by two).  True for the
    /// motivic and automorphic sets; the odd-by-odd sets skip points.
    pub fn is_progression(&self) -> bool {
        self.doubled.windows(2).all(|w| w[1] - w[0] == 2)
    }

    /// Translate every point by the doubled shift.
    pub fn shift_doubled(&self, s2: i64) -> CriticalSet {
        CriticalSet { doubled: self.doubled.iter().map(|p| p + s2).collect() }
    }
}

/// Hodge types of the effective motive of a pure dominant weight.
pub fn hodge_eff(mu: &Weight) -> Result<HodgeSet> {
    let cp = mu.cuspidal_params()?;
    let w = cp.motivic_weight;
    let pairs = cp
        .ell
        .iter()
        .map(|l| l.iter().map(|&e| ((e + w) / 2, (w - e) / 2)).collect())
        .collect();
    Ok(HodgeSet { pairs, purity_weight: w })
}

/// Hodge types of the tensor product of the two effective motives; purity
/// weight `w + w'`.  Contains a middle type `p = q` at some embedding
/// exactly when the cuspidal width vanishes.
pub fn hodge_tensor(mu: &Weight, mup: &Weight) -> Result<HodgeSet> {
    if mu.degree() != mup.degree() {
        return Err(Error::DegreeMismatch);
    }
    let cp = mu.cuspidal_params()?;
    let cq = mup.cuspidal_params()?;
    let w = cp.motivic_weight + cq.motivic_weight;
    let pairs = cp
        .ell
        .iter()
        .zip(&cq.ell)
        .map(|(l, lp)| {
            let mut v: Vec<(i64, i64)> = l
                .iter()
                .flat_map(|&e| lp.iter().map(move |&ep| ((e + ep + w) / 2, (w - e - ep) / 2)))
                .collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        })
        .collect();
    Ok(HodgeSet { pairs, purity_weight: w })
}

/// Critical integers of a Hodge structure without middle types:
/// `{p_max + 1, ..., w - p_max}` where `p_max` is the largest type below
/// the center line.
pub fn critical_set_motivic(h: &HodgeSet) -> Result<CriticalSet> {
    let w = h.purity_weight;
    let mut p_max = None;
    for (p, _) in h.pairs.iter().flatten() {
        if 2 * p == w {
            return Err(Error::MiddleHodgeType);
        }
        if 2 * p < w {
            p_max = Some(p_max.map_or(*p, |m: i64| m.max(*p)));
        }
    }
    let p_max = p_max.ok_or(Error::Invalid("empty Hodge data".into()))?;
    let q_min = w - p_max;
    CriticalSet::from_doubled((p_max + 1..=q_min).map(|m| 2 * m).collect())
}

/// Critical points of the completed Rankin–Selberg `L`-function in the
/// automorphic (unitary) normalization: the `width`-many points
/// `(2 - width)/2 + (d - d') <= m <= width/2 + (d - d')` of the parity class
/// dictated by `n - n'`.
pub fn critical_set_automorphic(mu: &Weight, mup: &Weight) -> Result<CriticalSet> {
    let width = mu.cuspidal_width(mup)?;
    if width == 0 {
        return Err(Error::NotDisjoint);
    }
    let d2 = mu.d_minus_d_doubled(mup)?;
    let lo = 2 - width + d2;
    let hi = width + d2;
    CriticalSet::from_doubled((lo..=hi).step_by(2).collect())
}

/// Doubled center `2 m_0` with `m_0 = -N/2 + (w + w')/2 - (d - d')`: the
/// image of the near-central automorphic point in the motivic normalization.
pub fn m0_doubled(mu: &Weight, mup: &Weight) -> Result<i64> {
    let s2 = s_shift_doubled(mu, mup)?;
    let big_n = (mu.rank() + mup.rank()) as i64;
    Ok(-big_n + s2)
}

/// Doubled shift `(w + w') - 2(d - d')` translating the automorphic critical
/// set onto the motivic one.
pub fn s_shift_doubled(mu: &Weight, mup: &Weight) -> Result<i64> {
    let w = mu.cuspidal_params()?.motivic_weight;
    let wp = mup.cuspidal_params()?.motivic_weight;
    Ok(w + wp - mu.d_minus_d_doubled(mup)?)
}

/// The archimedean factor of the pair, as a list of doubled `Gamma_C`
/// parameters per embedding: each entry `k` stands for
/// `Gamma_C(s + (d' - d) + k/2)`, plus (odd-by-odd ranks only) one
/// `Gamma_R(s + (d' - d) + eps_0)` factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaInventory {
    /// Per embedding, the multiset of `k` (sorted ascending).
    pub ks: Vec<Vec<i64>>,
    /// `2(d - d')`.
    pub d_diff_doubled: i64,
    /// The sign `eps_0` of the one-dimensional-by-one-dimensional piece,
    /// present exactly when both ranks are odd.
    pub eps0: Option<u8>,
    /// Required parity of doubled evaluation points: `(n + n') mod 2`.
    pub parity_doubled: u8,
}

/// Build the inventory from the cuspidal parameters.  `eps0` must be given
/// when both ranks are odd (it is extra analytic data, not a function of the
/// weights) and is ignored otherwise.
pub fn gamma_inventory(mu: &Weight, mup: &Weight, eps0: Option<u8>) -> Result<GammaInventory> {
    if mu.degree() != mup.degree() {
        return Err(Error::DegreeMismatch);
    }
    let n = mu.rank();
    let np = mup.rank();
    let both_odd = n % 2 == 1 && np % 2 == 1;
    if both_odd && eps0.is_none() {
        return Err(Error::Invalid("sign eps0 required when both ranks are odd".into()));
    }
    if let Some(e) = eps0 {
        if e > 1 {
            return Err(Error::Invalid("eps0 must be 0 or 1".into()));
        }
    }
    let cp = mu.cuspidal_params()?;
    let cq = mup.cuspidal_params()?;
    let d2 = mu.d_minus_d_doubled(mup)?;
    let mut ks = Vec::with_capacity(mu.degree());
    for t in 0..mu.degree() {
        let pos: Vec<i64> = cp.ell[t][..n / 2].to_vec();
        let posp: Vec<i64> = cq.ell[t][..np / 2].to_vec();
        let mut v = Vec::new();
        for &x in &pos {
            for &y in &posp {
                v.push(x + y);
                v.push(x - y); // positive: both lists are strictly positive
            }
        }
        if np % 2 == 1 {
            v.extend(pos.iter().copied());
        }
        if n % 2 == 1 {
            v.extend(posp.iter().copied());
        }
        v.iter_mut().for_each(|k| *k = k.abs());
        v.sort_unstable();
        ks.push(v);
    }
    Ok(GammaInventory {
        ks,
        d_diff_doubled: d2,
        eps0: if both_odd { eps0 } else { None },
        parity_doubled: ((n + np) % 2) as u8,
    })
}

impl GammaInventory {
    /// No pole of the factor at `s = m` (doubled `m2`).
    pub fn regular_at_doubled(&self, m2: i64) -> bool {
        for k in self.ks.iter().flatten() {
            // Gamma_C(s + (d'-d) + k/2): pole at non-positive integers
            let arg2 = m2 - self.d_diff_doubled + k;
            if arg2 <= 0 && arg2 % 2 == 0 {
                return false;
            }
        }
        if let Some(e) = self.eps0 {
            // Gamma_R(s + (d'-d) + eps0): pole at 0, -2, -4, ...
            let arg2 = m2 - self.d_diff_doubled + 2 * e as i64;
            if arg2 <= 0 && arg2.rem_euclid(4) == 0 {
                return false;
            }
        }
        true
    }

    /// No pole of the reflected factor (the one of the dual pair) at
    /// `s = 1 - m`.
    pub fn reflected_regular_at_doubled(&self, m2: i64) -> bool {
        for k in self.ks.iter().flatten() {
            let arg2 = 2 - m2 + self.d_diff_doubled + k;
            if arg2 <= 0 && arg2 % 2 == 0 {
                return false;
            }
        }
        if let Some(e) = self.eps0 {
            let arg2 = 2 - m2 + self.d_diff_doubled + 2 * e as i64;
            if arg2 <= 0 && arg2.rem_euclid(4) == 0 {
                return false;
            }
        }
        true
    }

    /// Critical: right parity class and regular on both sides.
    pub fn critical_at_doubled(&self, m2: i64) -> bool {
        m2.rem_euclid(2) as u8 == self.parity_doubled
            && self.regular_at_doubled(m2)
            && self.reflected_regular_at_doubled(m2)
    }

    /// Smallest doubled `Gamma_C` parameter, if any.
    pub fn min_k(&self) -> Option<i64> {
        self.ks.iter().flatten().min().copied()
    }

    /// All critical points.  They live in the doubled interval
    /// `[d2 - K + 2, d2 + K]` where `K` is the smallest parameter, so the
    /// set is finite whenever a `Gamma_C` factor exists.
    pub fn critical_set(&self) -> Result<CriticalSet> {
        let k = self.min_k().ok_or(Error::DegenerateIndexRange)?;
        let lo = self.d_diff_doubled - k + 2;
        let hi = self.d_diff_doubled + k;
        CriticalSet::from_doubled(
            (lo..=hi).filter(|&m2| self.critical_at_doubled(m2)).collect(),
        )
    }
}

/// The three equivalent conditions of the combinatorial lemma for a pair
/// with `n * n'` even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombLemmaReport {
    /// The pair was swapped so that the first member has even rank.
    pub swapped: bool,
    pub width: i64,
    /// `2(d - d')` in the (possibly swapped) order.
    pub d_diff_doubled: i64,
    /// (1) a balanced Kostant representative exists.
    pub balanced: bool,
    /// (2) `-N/2 + 1 - width/2 <= d - d' <= -N/2 - 1 + width/2`.
    pub interval: bool,
    /// (3) `-N/2` and `1 - N/2` are both critical.
    pub central_critical: bool,
    /// All three agree.
    pub equivalent: bool,
    pub search: BalancedSearch,
}

/// Check the equivalence "balanced representative exists" <=> "interval
/// condition on `d - d'`" <=> "the two near-central points are critical".
/// The first argument is normalized to even rank; an odd-by-odd pair has no
/// balanced length and is rejected with [`Error::OddDimension`], a
/// non-disjoint pair with [`Error::NotDisjoint`].
pub fn comb_lemma(mu: &Weight, mup: &Weight) -> Result<CombLemmaReport> {
    let (a, b, swapped) = if mu.rank() % 2 == 0 {
        (mu, mup, false)
    } else if mup.rank() % 2 == 0 {
        (mup, mu, true)
    } else {
        return Err(Error::OddDimension);
    };
    let width = a.cuspidal_width(b)?;
    if width == 0 {
        return Err(Error::NotDisjoint);
    }
    let big_n = (a.rank() + b.rank()) as i64;
    let d2 = a.d_minus_d_doubled(b)?;

    let search = find_balanced(a, b)?;
    let balanced = search.status == BalanceStatus::Balanced;

    let interval = (-big_n + 2 - width <= d2) && (d2 <= -big_n - 2 + width);

    let inv = gamma_inventory(a, b, None)?;
    let central_critical =
        inv.critical_at_doubled(-big_n) && inv.critical_at_doubled(2 - big_n);

    let equivalent = balanced == interval && interval == central_critical;
    Ok(CombLemmaReport {
        swapped,
        width,
        d_diff_doubled: d2,
        balanced,
        interval,
        central_critical,
        equivalent,
        search,
    })
}

/// Exact value of the ratio of archimedean factors at the two near-central
/// points: `L_v(-N/2) / L_v(1 - N/2) = r * (2 pi)^e` per place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArchimedeanRatio {
    /// The rational `r`, one per embedding.
    pub per_place: Vec<BigRational>,
    /// `e = n n' / 2`, the same at every place.
    pub exponent_per_place: u64,
    /// `r * n n' / 2` over the whole field.
    pub full_exponent: u64,
}

/// Closed-form ratio `prod_k 2 / (-N + 2(d'-d) + k)` over the doubled
/// inventory parameters `k`, valid when both near-central points are
/// critical (which keeps every denominator strictly positive).
pub fn archimedean_ratio(mu: &Weight, mup: &Weight) -> Result<ArchimedeanRatio> {
    let n = mu.rank();
    let np = mup.rank();
    if (n * np) % 2 == 1 {
        return Err(Error::OddDimension);
    }
    let big_n = (n + np) as i64;
    let inv = gamma_inventory(mu, mup, None)?;
    if !(inv.critical_at_doubled(-big_n) && inv.critical_at_doubled(2 - big_n)) {
        return Err(Error::NotCritical);
    }
    let mut per_place = Vec::with_capacity(inv.ks.len());
    for ks in &inv.ks {
        debug_assert_eq!(ks.len(), n * np / 2);
        let mut r = BigRational::one();
        for &k in ks {
            let x2 = -big_n - inv.d_diff_doubled + k; // doubled argument, > 0
            debug_assert!(x2 > 0 && x2 % 2 == 0);
            r *= BigRational::new(BigInt::from(2), BigInt::from(x2));
        }
        per_place.push(r);
    }
    let e = (n * np / 2) as u64;
    Ok(ArchimedeanRatio {
        full_exponent: e * per_place.len() as u64,
        exponent_per_place: e,
        per_place,
    })
}

/// Predicted position of the per-embedding representative length relative
/// to `n n' / 2`, read off from the spectra alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `|a~| < p~`: length exactly `n n' / 2`.
    Balanced,
    /// `a~ > p~`: length below `n n' / 2`.
    BelowHalf,
    /// `a~ < -p~`: length above `n n' / 2`.
    AboveHalf,
    /// `|a~|` hits one of the gaps: shifted coordinates collide.
    Collision,
}

/// The quantities steering the balanced-representative search:
/// half-parameters `beta = ell / 2`, the minimal gap `p~` between the two
/// spectra, and the shift `a~ = (d - d') + N/2`.  Everything is stored
/// doubled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceProfile {
    pub beta_doubled: Vec<Vec<i64>>,
    pub beta_prime_doubled: Vec<Vec<i64>>,
    /// `2 p~` per embedding: `min |ell_i - ell'_j|` over all index pairs.
    pub min_gap_doubled: Vec<i64>,
    /// `2 a~ = 2(d - d') + N`, common to all embeddings.
    pub mean_shift_doubled: i64,
    pub predictions: Vec<Regime>,
}

pub fn balance_profile(mu: &Weight, mup: &Weight) -> Result<BalanceProfile> {
    if mu.degree() != mup.degree() {
        return Err(Error::DegreeMismatch);
    }
    let cp = mu.cuspidal_params()?;
    let cq = mup.cuspidal_params()?;
    let n = mu.rank();
    let np = mup.rank();
    let big_n = (n + np) as i64;
    let shift = mu.d_minus_d_doubled(mup)? + big_n;
    let mut min_gap = Vec::new();
    let mut predictions = Vec::new();
    for t in 0..mu.degree() {
        // the shifted coordinates of the pair collide exactly when |2 a~|
        // equals one of these gaps, so the whole spectra matter, not just
        // their positive halves: a mixed-sign pair contributes the sum
        // |ell_i| + |ell'_j|
        let gaps: Vec<i64> = cp.ell[t]
            .iter()
            .flat_map(|&x| cq.ell[t].iter().map(move |&y| (x - y).abs()))
            .collect();
        let g = *gaps.iter().min().expect("non-empty index range");
        min_gap.push(g);
        let p = if gaps.contains(&shift.abs()) {
            Regime::Collision
        } else if shift.abs() < g {
            Regime::Balanced
        } else if shift > 0 {
            Regime::BelowHalf
        } else {
            Regime::AboveHalf
        };
        predictions.push(p);
    }
    Ok(BalanceProfile {
        beta_doubled: cp.ell.clone(),
        beta_prime_doubled: cq.ell.clone(),
        min_gap_doubled: min_gap,
        mean_shift_doubled: shift,
        predictions,
    })
}

/// Critical set of an odd-by-odd pair: both ranks odd and at least 3,
/// with the extra sign `eps_0` of the one-dimensional pieces.
pub fn odd_odd_critical_set(mu: &Weight, mup: &Weight, eps0: u8) -> Result<CriticalSet> {
    if mu.rank() % 2 == 0 || mup.rank() % 2 == 0 {
        return Err(Error::NotOddOdd);
    }
    if mu.rank() == 1 || mup.rank() == 1 {
        return Err(Error::DegenerateIndexRange);
    }
    gamma_inventory(mu, mup, Some(eps0))?.critical_set()
}

/// Location of the inevitable coordinate collision of an odd-by-odd pair at
/// the self-dual shift `d - d' = -N/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionInfo {
    /// 1-based positions inside `mu (x) mu' + rho`: the two middles,
    /// `(n+1)/2` and `n + (n'+1)/2`.
    pub positions: (usize, usize),
    /// Common doubled value of the two shifted coordinates.
    pub value_doubled: i64,
}

/// Everything the odd-by-odd analysis produces: restricted width, the
/// critical sets for both signs, whether the two near-central points are
/// critical (and the predicted answer: `width+ > 0`, `eps_0 = 1`,
/// `d - d' = -N/2`), and the collision of the balanced search at the
/// self-dual shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddOddReport {
    pub width_plus: i64,
    /// Critical sets for `eps_0 = 0` and `eps_0 = 1`.
    pub sets: [CriticalSet; 2],
    /// Is `{-N/2, 1 - N/2}` contained in the set, per sign.
    pub central_pair_critical: [bool; 2],
    pub central_pair_predicted: [bool; 2],
    /// Present exactly when `2(d - d') = -N`.
    pub collision: Option<CollisionInfo>,
    pub balance: BalanceStatus,
}

pub fn odd_odd_report(mu: &Weight, mup: &Weight) -> Result<OddOddReport> {
    let width_plus = mu.cuspidal_width_plus(mup)?;
    let n = mu.rank();
    let np = mup.rank();
    let big_n = (n + np) as i64;
    let d2 = mu.d_minus_d_doubled(mup)?;
    let sets = [
        odd_odd_critical_set(mu, mup, 0)?,
        odd_odd_critical_set(mu, mup, 1)?,
    ];
    let central = |s: &CriticalSet| s.contains_doubled(-big_n) && s.contains_doubled(2 - big_n);
    let central_pair_critical = [central(&sets[0]), central(&sets[1])];
    let central_pair_predicted = [false, width_plus > 0 && d2 == -big_n];
    let collision = if d2 == -big_n {
        Some(CollisionInfo {
            positions: ((n + 1) / 2, n + (np + 1) / 2),
            value_doubled: mup.purity_weight()? - n as i64,
        })
    } else {
        None
    };
    let balance = match find_balanced(mu, mup) {
        Ok(b) => b.status,
        Err(Error::OddDimension) => BalanceStatus::Unbalanced,
        Err(e) => return Err(e),
    };
    Ok(OddOddReport {
        width_plus,
        sets,
        central_pair_critical,
        central_pair_predicted,
        collision,
        balance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(coords: Vec<i64>) -> Weight {
        Weight::single(coords).unwrap()
    }

    #[test]
    fn hodge_of_rank_two() {
        let mu = w(vec![-1, -11]);
        let h = hodge_eff(&mu).unwrap();
        assert_eq!(h.purity_weight, 11);
        assert_eq!(h.pairs, vec![vec![(11, 0), (0, 11)]]);
        let crit = critical_set_motivic(&h).unwrap();
        assert_eq!(crit.doubled_points(), (1..=11).map(|m| 2 * m).collect::<Vec<_>>());
        assert!(crit.is_progression());
    }

    #[test]
    fn tensor_hodge_and_middle_detection() {
        let mu = w(vec![-1, -11]);
        let nu = w(vec![0]);
        let h = hodge_tensor(&mu, &nu).unwrap();
        assert_eq!(h.purity_weight, 11);
        assert_eq!(h.pairs, vec![vec![(11, 0), (0, 11)]]);

        // width 0 pair: ell = (8,0,-8) vs (4,0,-4) share the middle 0
        let a = w(vec![3, 0, -3]);
        let b = w(vec![1, 0, -1]);
        let h = hodge_tensor(&a, &b).unwrap();
        assert!(h.pairs[0].iter().any(|&(p, q)| p == q));
        assert_eq!(critical_set_motivic(&h), Err(Error::MiddleHodgeType));
    }

    #[test]
    fn automorphic_critical_set_half_integral() {
        // n = 2, n' = 1, ell = (4,-4) vs (0), d - d' = -3/2:
        // four half-integral points -5/2 .. 1/2
        let mu = w(vec![0, -3]); // a = 4, 2d = -3
        let nu = w(vec![0]);
        assert_eq!(mu.cuspidal_width(&nu).unwrap(), 4);
        let s = critical_set_automorphic(&mu, &nu).unwrap();
        assert_eq!(s.doubled_points(), &[-5, -3, -1, 1]);
        assert_eq!(s.parity_doubled(), Some(1));
        assert_eq!(s.len() as i64, mu.cuspidal_width(&nu).unwrap());
    }

    #[test]
    fn shift_connects_normalizations() {
        let mu = w(vec![-1, -11]);
        let nu = w(vec![0]);
        let aut = critical_set_automorphic(&mu, &nu).unwrap();
        let s2 = s_shift_doubled(&mu, &nu).unwrap();
        let motivic = critical_set_motivic(&hodge_tensor(&mu, &nu).unwrap()).unwrap();
        assert_eq!(aut.shift_doubled(s2), motivic);
        // m0 is the image of -N/2
        let m0 = m0_doubled(&mu, &nu).unwrap();
        assert_eq!(m0, -3 + s2);
        assert_eq!(m0, 20); // m0 = 10
    }

    #[test]
    fn gamma_inventory_shapes() {
        let mu = w(vec![0, -3]); // ell = (4,-4)
        let nu = w(vec![0]);
        let inv = gamma_inventory(&mu, &nu, None).unwrap();
        assert_eq!(inv.ks, vec![vec![4]]);
        assert_eq!(inv.d_diff_doubled, -3);
        assert!(inv.eps0.is_none());
        // scan agrees with the closed-form set
        let set = inv.critical_set().unwrap();
        assert_eq!(set, critical_set_automorphic(&mu, &nu).unwrap());

        // even x even
        let a = w(vec![2, -3]); // ell = (6,-6), 2d = -1
        let b = w(vec![1, 0]); // ell = (2,-2), 2d = 1
        let inv = gamma_inventory(&a, &b, None).unwrap();
        assert_eq!(inv.ks, vec![vec![4, 8]]);
        assert_eq!(
            inv.critical_set().unwrap(),
            critical_set_automorphic(&a, &b).unwrap()
        );
    }

    #[test]
    fn comb_lemma_three_ways() {
        // Balanced case from the rank-(2,1) family
        let mu = w(vec![-1, -2]);
        let nu = w(vec![0]);
        let rep = comb_lemma(&mu, &nu).unwrap();
        assert!(rep.equivalent && rep.balanced && rep.interval && rep.central_critical);

        // Far-off shift: all three fail together
        let nu = w(vec![7]);
        let rep = comb_lemma(&mu, &nu).unwrap();
        assert!(rep.equivalent && !rep.balanced && !rep.interval && !rep.central_critical);

        // swap normalization: odd rank first
        let rep = comb_lemma(&nu, &mu).unwrap();
        assert!(rep.swapped);
    }

    #[test]
    fn ratio_at_central_points() {
        // ell = (4,-4) vs (0), d - d' = -3/2: single factor, ratio 1/2 * (2 pi)
        let mu = w(vec![0, -3]);
        let nu = w(vec![0]);
        let r = archimedean_ratio(&mu, &nu).unwrap();
        assert_eq!(r.exponent_per_place, 1);
        assert_eq!(r.full_exponent, 1);
        assert_eq!(r.per_place[0], BigRational::new(BigInt::from(1), BigInt::from(2)));

        // non-critical pair is rejected
        let far = w(vec![7]);
        assert_eq!(archimedean_ratio(&mu, &far), Err(Error::NotCritical));
    }

    #[test]
    fn profile_regimes() {
        let mu = w(vec![0, -3]); // ell = (4,-4), 2d = -3
        let nu = w(vec![0]); // 2d' = 0
        let p = balance_profile(&mu, &nu).unwrap();
        assert_eq!(p.min_gap_doubled, vec![4]);
        assert_eq!(p.mean_shift_doubled, 0); // 2(d-d') + N = -3 + 3
        assert_eq!(p.predictions, vec![Regime::Balanced]);

        let far = w(vec![7]); // 2(d-d') = -17, shift = -14
        let p = balance_profile(&mu, &far).unwrap();
        assert_eq!(p.predictions, vec![Regime::AboveHalf]);
        // and indeed the length exceeds n n' / 2 = 1
        let s = find_balanced(&mu, &far).unwrap();
        assert!(s.lengths[0] > 1);
    }

    #[test]
    fn odd_odd_sets_match_scan_shape() {
        // ell = (8,0,-8) vs (4,0,-4), d = d': smallest parameter is
        // ell + = 4, so the window is m in {-1, 0, 1, 2}; the Gamma_R
        // parity sieve keeps {0, 1} for eps0 = 1 and {-1, 2} for eps0 = 0.
        let a = w(vec![3, 0, -3]);
        let b = w(vec![1, 0, -1]);
        let s1 = odd_odd_critical_set(&a, &b, 1).unwrap();
        assert_eq!(s1.doubled_points(), &[0, 2]);
        let s0 = odd_odd_critical_set(&a, &b, 0).unwrap();
        assert_eq!(s0.doubled_points(), &[-2, 4]);

        // larger gap: parity alternation appears
        let c = w(vec![5, 0, -5]); // ell = (12,0,-12)
        let dd = w(vec![9, 0, -9]); // ell = (20,0,-20)
        let s = odd_odd_critical_set(&c, &dd, 1).unwrap();
        assert_eq!(s.doubled_points(), &[-4, 0, 2, 6]); // m = -2, 0, 1, 3
        assert!(!s.is_progression());
    }

    #[test]
    fn odd_odd_central_pair_and_collision() {
        // d - d' = -3 realizes the self-dual shift for N = 6
        let a = w(vec![-1, -3, -5]); // ell = (6,0,-6), 2d = -6
        let b = w(vec![0, 0, 0]); // ell = (2,0,-2), 2d' = 0
        let rep = odd_odd_report(&a, &b).unwrap();
        assert_eq!(rep.width_plus, 4);
        assert_eq!(rep.central_pair_predicted, [false, true]);
        assert_eq!(rep.central_pair_critical, [false, true]);
        assert_eq!(rep.balance, BalanceStatus::Collision);
        let c = rep.collision.unwrap();
        assert_eq!(c.positions, (2, 5));
        assert_eq!(c.value_doubled, -3);

        // away from the self-dual shift there is no collision
        let rep = odd_odd_report(&Weight::single(vec![3, 0, -3]).unwrap(), &b).unwrap();
        assert!(rep.collision.is_none());
        assert_eq!(rep.central_pair_predicted, [false, false]);
    }
}
