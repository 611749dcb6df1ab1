//! The recursive maps `phi`, `psi` and `mu` on 132-avoiding permutations.
//!
//! All three are defined through the block decompositions of
//! [`Permutation::decompose_left`] and [`Permutation::decompose_right`].
//! Public entry points check the 132-avoidance precondition once; the
//! recursions below them assume it.
//!
//! ```text
//! phi(alpha (-) (beta (+) 1)) = phi(beta) (-) (phi(alpha) (+) 1)
//! mu (alpha (-) (beta (+) 1)) = mu(alpha) (-) (mu(psi(beta)) (+) 1)
//! ```
//!
//! `psi` branches on the position of `n`; see [`psi`].

use crate::enumeration::{enumerate_avoiders, AvoidanceClass, Limits};
use crate::error::{Error, Result};
use crate::pattern::VincularPattern;
use crate::perm::Permutation;
use crate::statistics::{MultiStatistic, Statistic};

fn require_132_avoider(p: &Permutation) -> Result<()> {
    let class = AvoidanceClass::P132;
    if class.contains(p) {
        Ok(())
    } else {
        Err(Error::NotAvoiding {
            perm: p.to_string(),
            pattern: class.sigma().to_string(),
        })
    }
}

fn one() -> Permutation {
    Permutation::identity(1)
}

fn split_right(p: &Permutation) -> (Permutation, Permutation) {
    p.decompose_right()
        .expect("recursion only reaches non-empty 132-avoiders")
}

fn split_left(p: &Permutation) -> (Permutation, Permutation) {
    p.decompose_left()
        .expect("recursion only reaches non-empty 132-avoiders")
}

/// Involution on `S_n(132)` exchanging the `2-31`/`2-13` counts and
/// `rlmax`/`rlmin`.
pub fn phi(p: &Permutation) -> Result<Permutation> {
    require_132_avoider(p)?;
    Ok(phi_rec(p))
}

fn phi_rec(p: &Permutation) -> Permutation {
    if p.is_empty() {
        return Permutation::empty();
    }
    let (alpha, beta) = split_right(p);
    phi_rec(&beta).skew_sum(&phi_rec(&alpha).direct_sum(&one()))
}

/// Bijection on `S_n(132)` carrying `(2-31, des)` to `(2-13, des)`.
///
/// With `n` at position 1, `p = 1 (-) alpha` and the image is
/// `1 (-) psi(alpha)`. With `n` strictly inside, `p = (alpha (+) 1) (-) beta`;
/// splitting `psi(beta) = gamma (-) (delta (+) 1)` the image is
/// `((psi(alpha) (-) (delta (+) 1)) (+) 1) (-) gamma`. With `n` last,
/// `p = alpha (+) 1`; splitting `psi(alpha) = (gamma (+) 1) (-) delta` the
/// image is `((gamma (+) 1) (+) 1) (-) delta`.
///
/// The empty permutation is rejected here; [`mu`] uses the recursion
/// directly, where `psi(ε) = ε`.
pub fn psi(p: &Permutation) -> Result<Permutation> {
    if p.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    require_132_avoider(p)?;
    psi_rec(p)
}

/// Which branch of `psi` a non-empty 132-avoider falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiCase {
    /// `n` is the first entry.
    MaxFirst,
    /// `n` is neither first nor last.
    MaxInside,
    /// `n` is the last entry (and `n >= 2`).
    MaxLast,
}

/// Branch selection for `psi`; `None` for the empty permutation and for `1`.
pub fn psi_case(p: &Permutation) -> Option<PsiCase> {
    let n = p.len();
    if n < 2 {
        return None;
    }
    let at = p.position_of(n).expect("n is present");
    Some(if at == 1 {
        PsiCase::MaxFirst
    } else if at == n {
        PsiCase::MaxLast
    } else {
        PsiCase::MaxInside
    })
}

fn psi_rec(p: &Permutation) -> Result<Permutation> {
    let n = p.len();
    if n <= 1 {
        return Ok(p.clone());
    }
    let image = match psi_case(p).expect("n >= 2") {
        PsiCase::MaxFirst => {
            let (_, alpha) = split_left(p);
            one().skew_sum(&psi_rec(&alpha)?)
        }
        PsiCase::MaxInside => {
            let (alpha, beta) = split_left(p);
            let (gamma, delta) = psi_rec(&beta)?
                .decompose_right()
                .map_err(|e| Error::Internal(format!("psi({beta}) is not decomposable: {e}")))?;
            psi_rec(&alpha)?
                .skew_sum(&delta.direct_sum(&one()))
                .direct_sum(&one())
                .skew_sum(&gamma)
        }
        PsiCase::MaxLast => {
            let (alpha, _) = split_left(p);
            let (gamma, delta) = psi_rec(&alpha)?
                .decompose_left()
                .map_err(|e| Error::Internal(format!("psi({alpha}) is not decomposable: {e}")))?;
            gamma.direct_sum(&one()).direct_sum(&one()).skew_sum(&delta)
        }
    };
    Ok(image)
}

/// Bijection on `S_n(132)` carrying `(2-13, des, 1-2])` to
/// `(21-3, des, 1-2])`.
pub fn mu(p: &Permutation) -> Result<Permutation> {
    require_132_avoider(p)?;
    mu_rec(p)
}

fn mu_rec(p: &Permutation) -> Result<Permutation> {
    if p.is_empty() {
        return Ok(Permutation::empty());
    }
    let (alpha, beta) = split_right(p);
    let inner = mu_rec(&psi_rec(&beta)?)?;
    Ok(mu_rec(&alpha)?.skew_sum(&inner.direct_sum(&one())))
}

/// The two multistatistics exchanged by inversion on `S_n(132)`:
/// `(23-1, 3-12, des)` and `(3-12, 23-1, des)`.
pub fn inverse_prop_statistics() -> (MultiStatistic, MultiStatistic) {
    let a: VincularPattern = "23-1".parse().expect("static pattern");
    let b: VincularPattern = "3-12".parse().expect("static pattern");
    (
        MultiStatistic::new(vec![a.clone().into(), b.clone().into(), Statistic::Des]),
        MultiStatistic::new(vec![b.into(), a.into(), Statistic::Des]),
    )
}

/// First `p` in `S_n(132)` with `(23-1, 3-12, des)(p^-1) != (3-12, 23-1, des)(p)`.
pub fn inverse_prop_counterexample(n: usize, limits: &Limits) -> Result<Option<Permutation>> {
    let (on_inverse, on_perm) = inverse_prop_statistics();
    Ok(enumerate_avoiders(AvoidanceClass::P132, n, limits)?.find(|p| on_inverse.eval(&p.inverse()) != on_perm.eval(p)))
}

/// True iff inversion exchanges `23-1` and `3-12` (and keeps `des`) on all of
/// `S_n(132)`.
pub fn verify_inverse_prop(n: usize, limits: &Limits) -> Result<bool> {
    Ok(inverse_prop_counterexample(n, limits)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn phi_small() {
        assert_eq!(phi(&Permutation::empty()).unwrap(), Permutation::empty());
        assert_eq!(phi(&p("1")).unwrap(), p("1"));
        assert_eq!(phi(&p("21")).unwrap(), p("12"));
        assert_eq!(phi(&p("12")).unwrap(), p("21"));
        assert!(matches!(phi(&p("132")), Err(Error::NotAvoiding { .. })));
    }

    #[test]
    fn psi_small() {
        assert_eq!(psi(&p("1")).unwrap(), p("1"));
        assert_eq!(psi(&p("231")).unwrap(), p("213"));
        assert_eq!(psi(&p("12")).unwrap(), p("12"));
        assert_eq!(psi(&p("21")).unwrap(), p("21"));
        assert!(matches!(psi(&Permutation::empty()), Err(Error::EmptyPermutation)));
        assert!(matches!(psi(&p("1432")), Err(Error::NotAvoiding { .. })));
    }

    #[test]
    fn mu_small() {
        assert_eq!(mu(&Permutation::empty()).unwrap(), Permutation::empty());
        assert_eq!(mu(&p("213")).unwrap(), p("213"));
        assert_eq!(mu(&p("1")).unwrap(), p("1"));
        assert!(mu(&p("132")).is_err());
    }

    #[test]
    fn psi_cases() {
        assert_eq!(psi_case(&p("1")), None);
        assert_eq!(psi_case(&p("312")), Some(PsiCase::MaxFirst));
        assert_eq!(psi_case(&p("231")), Some(PsiCase::MaxInside));
        assert_eq!(psi_case(&p("213")), Some(PsiCase::MaxLast));
    }

    #[test]
    fn inverse_prop_small() {
        let limits = Limits::default();
        assert!(verify_inverse_prop(1, &limits).unwrap());
        assert!(verify_inverse_prop(3, &limits).unwrap());
        assert!(verify_inverse_prop(8, &limits).unwrap());
    }
}
