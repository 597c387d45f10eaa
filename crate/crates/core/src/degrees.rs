//! Cohomological degree bookkeeping over a totally real field of degree `r`.
//!
//! For `GL(n)` the cuspidal range of the symmetric space has bottom degree
//! `b_n = r * floor(n^2/4)` and top degree `t_n = r * (floor(n^2/4) +
//! ceil(n/2) - 1)`; the dual-top degree is `t~_n = t_n + r - 1`.  The sum of
//! the bottom (resp. dual-top) degrees of a pair, plus half the unipotent
//! dimension `r n n' / 2`, lands exactly at the bottom (resp. one below the
//! dual top) of `GL(n + n')` — the numerical backbone of the pairing
//! argument.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub n: usize,
    pub r: usize,
    pub bottom: u64,
    pub top: u64,
    pub top_dual: u64,
}

pub fn degree_profile(n: usize, r: usize) -> Result<DegreeProfile> {
    if n == 0 || r == 0 {
        return Err(Error::Invalid("rank and degree must be positive".into()));
    }
    let r64 = r as u64;
    let n64 = n as u64;
    let bottom = r64 * (n64 * n64 / 4);
    let top = r64 * (n64 * n64 / 4 + n64.div_ceil(2) - 1);
    Ok(DegreeProfile { n, r, bottom, top, top_dual: top + r64 - 1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeIdentities {
    /// `b_n + b_{n'} + r n n' / 2 = b_{n+n'}`.
    pub bottom_holds: bool,
    /// `t~_n + t~_{n'} + r n n' / 2 = t~_{n+n'} - 1`.
    pub top_dual_holds: bool,
    pub half_unipotent: u64,
}

/// Check the two degree identities for a pair of ranks.  `n n'` must be
/// even for half the unipotent dimension to be an integer.
pub fn degree_identities(n: usize, np: usize, r: usize) -> Result<DegreeIdentities> {
    if (n * np) % 2 == 1 {
        return Err(Error::OddDimension);
    }
    let a = degree_profile(n, r)?;
    let b = degree_profile(np, r)?;
    let c = degree_profile(n + np, r)?;
    let half = (r * n * np / 2) as u64;
    Ok(DegreeIdentities {
        bottom_holds: a.bottom + b.bottom + half == c.bottom,
        top_dual_holds: a.top_dual + b.top_dual + half == c.top_dual - 1,
        half_unipotent: half,
    })
}

/// Lowest degree carrying cohomology induced from the equal-block parabolic
/// with `v` blocks of size `u` (over the rationals, `r = 1`):
/// `q = v floor(u^2/4) + N(u-1)(v-1)/4` with `N = u v`.  The second term is
/// always an integer.  For `v = 1` this is the bottom degree `b_N`; for
/// `v > 1` it sits strictly below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InducedBottom {
    pub q: u64,
    pub bottom: u64,
}

pub fn induced_bottom_degree(u: usize, v: usize) -> Result<InducedBottom> {
    if u == 0 || v == 0 {
        return Err(Error::Invalid("block sizes must be positive".into()));
    }
    let big_n = u * v;
    let t = big_n * (u - 1) * (v - 1);
    debug_assert_eq!(t % 4, 0);
    let q = (v * (u * u / 4) + t / 4) as u64;
    let bottom = degree_profile(big_n, 1)?.bottom;
    Ok(InducedBottom { q, bottom })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles() {
        let p = degree_profile(2, 1).unwrap();
        assert_eq!((p.bottom, p.top, p.top_dual), (1, 1, 1));
        let p = degree_profile(3, 1).unwrap();
        assert_eq!((p.bottom, p.top, p.top_dual), (2, 3, 3));
        let p = degree_profile(2, 3).unwrap();
        assert_eq!((p.bottom, p.top, p.top_dual), (3, 3, 5));
        assert!(degree_profile(0, 1).is_err());
    }

    #[test]
    fn identities() {
        for r in 1..=3 {
            for n in 1..=8 {
                for np in 1..=8 {
                    if (n * np) % 2 == 1 {
                        assert_eq!(degree_identities(n, np, r), Err(Error::OddDimension));
                        continue;
                    }
                    let id = degree_identities(n, np, r).unwrap();
                    assert!(id.bottom_holds, "bottom fails at ({n},{np},{r})");
                    assert!(id.top_dual_holds, "dual top fails at ({n},{np},{r})");
                }
            }
        }
    }

    #[test]
    fn induced_degrees() {
        let d = induced_bottom_degree(2, 2).unwrap();
        assert_eq!((d.q, d.bottom), (3, 4));
        let d = induced_bottom_degree(3, 2).unwrap();
        assert_eq!((d.q, d.bottom), (7, 9));
        for u in 1..=6 {
            for v in 1..=6 {
                let d = induced_bottom_degree(u, v).unwrap();
                if v == 1 {
                    assert_eq!(d.q, d.bottom);
                } else {
                    assert!(d.q < d.bottom);
                }
            }
        }
    }
}
