//! Closed-form evaluators for the average-distance bounds, over exact
//! rationals.
//!
//! Evaluators return a value even when a variant's hypotheses fail, together
//! with named hypothesis flags, so callers can chart where a bound stops
//! being meaningful instead of silently misusing it. Graph-class hypotheses
//! (triangle-free, C4-free) cannot be judged from the numeric parameters and
//! are the caller's responsibility; the certification pipeline enforces them
//! against the actual graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratio::{exact_str, frac, int, Rational};
use num::One;

/// Order and degree extremes of a graph, plus the derived quantities each
/// bound needs. Derived values are recomputed on demand, never stored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundParams {
    pub n: u64,
    pub min_deg: u64,
    pub max_deg: u64,
}

impl BoundParams {
    pub fn new(n: u64, min_deg: u64, max_deg: u64) -> Result<Self> {
        if !(1 <= min_deg && min_deg <= max_deg && max_deg <= n.saturating_sub(1)) {
            return Err(Error::InvalidParameters(format!(
                "need 1 <= min_deg <= max_deg <= n-1, got n={n}, min={min_deg}, max={max_deg}"
            )));
        }
        Ok(BoundParams { n, min_deg, max_deg })
    }

    /// `N = n - max_deg + min_deg`.
    pub fn reduced_order(&self) -> i64 {
        self.n as i64 - self.max_deg as i64 + self.min_deg as i64
    }

    pub fn epsilon_min(&self) -> u64 {
        epsilon(self.min_deg, self.min_deg)
    }

    pub fn epsilon_max(&self) -> u64 {
        epsilon(self.max_deg, self.min_deg)
    }

    /// `N = n - eps_max + eps_min` for the C4-free upper bound.
    pub fn reduced_order_c4(&self) -> i64 {
        self.n as i64 - self.epsilon_max() as i64 + self.epsilon_min() as i64
    }

    /// `(max_deg - 1)(min_deg + 1) + 1`, the hub block order of the C4-free
    /// chain.
    pub fn theta_max(&self) -> u64 {
        (self.max_deg - 1) * (self.min_deg + 1) + 1
    }

    /// `(min_deg + 2)(min_deg + 1)`, the port block order of the C4-free
    /// chain.
    pub fn theta_min(&self) -> u64 {
        (self.min_deg + 2) * (self.min_deg + 1)
    }

    /// `M = n - theta_max + theta_min` for the C4-free lower bound.
    pub fn reduced_order_theta(&self) -> i64 {
        self.n as i64 - self.theta_max() as i64 + self.theta_min() as i64
    }
}

/// `eps_d = d * min_deg - 2 * floor(d/2) + 1`: the least size of a second
/// neighborhood around a degree-d vertex in a C4-free graph of the given
/// minimum degree.
pub fn epsilon(d: u64, min_deg: u64) -> u64 {
    d * min_deg + 1 - 2 * (d / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundVariant {
    Plesnik,
    KouiderWinkler,
    Thm4Upper,
    Thm4Lower,
    Thm5Upper,
    Thm5Lower,
    Thm6Upper,
    Thm63Lower,
}

impl BoundVariant {
    pub const ALL: [BoundVariant; 8] = [
        BoundVariant::Plesnik,
        BoundVariant::KouiderWinkler,
        BoundVariant::Thm4Upper,
        BoundVariant::Thm4Lower,
        BoundVariant::Thm5Upper,
        BoundVariant::Thm5Lower,
        BoundVariant::Thm6Upper,
        BoundVariant::Thm63Lower,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BoundVariant::Plesnik => "plesnik",
            BoundVariant::KouiderWinkler => "kouider_winkler",
            BoundVariant::Thm4Upper => "thm4_upper",
            BoundVariant::Thm4Lower => "thm4_lower",
            BoundVariant::Thm5Upper => "thm5_upper",
            BoundVariant::Thm5Lower => "thm5_lower",
            BoundVariant::Thm6Upper => "thm6_upper",
            BoundVariant::Thm63Lower => "thm63_lower",
        }
    }

    /// Accepts the canonical name with `_` or `-` separators.
    pub fn parse(s: &str) -> Option<Self> {
        let canon = s.replace('-', "_");
        Self::ALL.iter().copied().find(|v| v.name() == canon)
    }

    /// Upper bounds hold for every graph meeting their hypotheses; lower
    /// bounds are met by the matching extremal construction.
    pub fn is_upper(&self) -> bool {
        !matches!(
            self,
            BoundVariant::Thm4Lower | BoundVariant::Thm5Lower | BoundVariant::Thm63Lower
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub met: bool,
}

/// An evaluated bound: the exact value plus every hypothesis flag.
#[derive(Clone, Debug, Serialize)]
pub struct BoundValue {
    pub variant: BoundVariant,
    #[serde(serialize_with = "crate::bounds::serialize_rational")]
    pub value: Rational,
    pub hypotheses: Vec<Hypothesis>,
}

pub(crate) fn serialize_rational<S: serde::Serializer>(
    r: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&exact_str(r))
}

impl BoundValue {
    pub fn all_met(&self) -> bool {
        self.hypotheses.iter().all(|h| h.met)
    }
}

/// Evaluates one bound variant at the given parameters, exactly.
pub fn evaluate_bound(variant: BoundVariant, p: &BoundParams) -> BoundValue {
    let n = int(p.n as i64);
    let dmin = int(p.min_deg as i64);
    let dmax = int(p.max_deg as i64);
    let pairs2 = &n * (&n - int(1)); // n(n-1)
    let mut hyp = vec![Hypothesis {
        name: "n >= 2".into(),
        met: p.n >= 2,
    }];
    let degree_hyp = Hypothesis {
        name: "min_degree >= 3".into(),
        met: p.min_deg >= 3,
    };

    let scaled = |reduced: i64, numer: Rational, denom: Rational, constant: Rational| {
        let nn = int(reduced);
        let lead = &nn * (&nn - int(1)) / &pairs2 * numer / denom;
        lead + constant
    };

    let value = match variant {
        BoundVariant::Plesnik => (&n + int(1)) / int(3),
        BoundVariant::KouiderWinkler => &n / (&dmin + int(1)) + int(2),
        BoundVariant::Thm4Upper | BoundVariant::Thm4Lower => {
            hyp.push(degree_hyp);
            if variant == BoundVariant::Thm4Lower {
                hyp.push(Hypothesis {
                    name: "n >= max_degree + min_degree + 1".into(),
                    met: p.n > p.max_deg + p.min_deg,
                });
                hyp.push(Hypothesis {
                    name: "(n - max_degree) divisible by min_degree + 1".into(),
                    met: (p.n as i64 - p.max_deg as i64).rem_euclid(p.min_deg as i64 + 1) == 0,
                });
            }
            let constant = if variant == BoundVariant::Thm4Upper {
                int(4)
            } else {
                int(-14)
            };
            scaled(
                p.reduced_order(),
                &n + int(2) * &dmax,
                &dmin + int(1),
                constant,
            )
        }
        BoundVariant::Thm5Upper | BoundVariant::Thm5Lower => {
            hyp.push(degree_hyp);
            if variant == BoundVariant::Thm5Lower {
                hyp.push(Hypothesis {
                    name: "n >= max_degree + 3 * min_degree".into(),
                    met: p.n >= p.max_deg + 3 * p.min_deg,
                });
                hyp.push(Hypothesis {
                    name: "(n - max_degree - min_degree) divisible by 2 * min_degree".into(),
                    met: (p.n as i64 - p.max_deg as i64 - p.min_deg as i64)
                        .rem_euclid(2 * p.min_deg as i64)
                        == 0,
                });
            }
            let constant = if variant == BoundVariant::Thm5Upper {
                int(7)
            } else {
                int(-8)
            };
            frac(2, 3) * scaled(p.reduced_order(), &n + int(2) * &dmax, dmin.clone(), int(0))
                + constant
        }
        BoundVariant::Thm6Upper => {
            hyp.push(degree_hyp);
            let eps_max = int(p.epsilon_max() as i64);
            let eps_min = int(p.epsilon_min() as i64);
            frac(5, 3)
                * scaled(
                    p.reduced_order_c4(),
                    &n + int(2) * eps_max,
                    eps_min,
                    int(0),
                )
                + int(8)
        }
        BoundVariant::Thm63Lower => {
            hyp.push(degree_hyp);
            hyp.push(Hypothesis {
                name: "min_degree + 1 is a prime power".into(),
                met: crate::gf::Field::new(p.min_deg + 1).is_ok(),
            });
            let dd2 = p.min_deg + 2;
            hyp.push(Hypothesis {
                name: "max_degree - 1 a positive multiple of min_degree + 2".into(),
                met: p.max_deg > 1 && (p.max_deg - 1).is_multiple_of(dd2),
            });
            let residue = p.n as i64 - p.theta_max() as i64;
            hyp.push(Hypothesis {
                name: "n - theta_max a positive multiple of theta_min".into(),
                met: residue > 0 && residue.rem_euclid(p.theta_min() as i64) == 0,
            });
            let theta_max = int(p.theta_max() as i64);
            let theta_min = int(p.theta_min() as i64);
            frac(5, 3)
                * scaled(
                    p.reduced_order_theta(),
                    &n + int(2) * theta_max,
                    theta_min,
                    int(0),
                )
                - int(13)
        }
    };
    BoundValue {
        variant,
        value,
        hypotheses: hyp,
    }
}

/// Largest weighted average distance of a graph whose weights are all at
/// least `k` and sum to at most `total`: `(N-k)/(N-1) * (N+k)/(3k)`,
/// attained by a path with constant weight `k`.
pub fn weighted_path_bound(total: &Rational, k: u64) -> Result<Rational> {
    if k == 0 {
        return Err(Error::InvalidParameters("k must be positive".into()));
    }
    if total <= &Rational::one() {
        return Err(Error::TotalWeightTooSmall(exact_str(total)));
    }
    let ratio = total / int(k as i64);
    if !ratio.is_integer() || ratio < Rational::one() {
        return Err(Error::NotAMultiple(exact_str(total), k));
    }
    let k = int(k as i64);
    Ok((total - &k) / (total - int(1)) * (total + &k) / (int(3) * &k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::average_distance;
    use num::BigInt;

    fn params(n: u64, dmin: u64, dmax: u64) -> BoundParams {
        BoundParams::new(n, dmin, dmax).unwrap()
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(3, 3), 8);
        assert_eq!(epsilon(4, 3), 9);
        assert_eq!(epsilon(8, 3), 17);
    }

    #[test]
    fn kouider_winkler_example() {
        let b = evaluate_bound(BoundVariant::KouiderWinkler, &params(28, 3, 8));
        assert_eq!(b.value, int(9));
        assert!(b.all_met());
    }

    #[test]
    fn thm4_upper_example() {
        let b = evaluate_bound(BoundVariant::Thm4Upper, &params(28, 3, 8));
        assert_eq!(b.value, frac(4295, 378));
        assert!(b.all_met());
    }

    #[test]
    fn plesnik_is_tight_on_paths() {
        let b = evaluate_bound(BoundVariant::Plesnik, &params(4, 1, 2));
        let mu = average_distance(&crate::constructions::path(4).unwrap()).unwrap();
        assert_eq!(b.value, mu);
        assert_eq!(b.value, frac(5, 3));
    }

    #[test]
    fn upper_lower_gaps_are_constant() {
        for (upper, lower, gap) in [
            (BoundVariant::Thm4Upper, BoundVariant::Thm4Lower, 18),
            (BoundVariant::Thm5Upper, BoundVariant::Thm5Lower, 15),
        ] {
            for n in [20u64, 28, 45] {
                for dmin in [3u64, 4] {
                    for dmax in [dmin + 1, dmin + 4] {
                        let p = params(n, dmin, dmax);
                        let hi = evaluate_bound(upper, &p).value;
                        let lo = evaluate_bound(lower, &p).value;
                        assert_eq!(hi - lo, int(gap));
                    }
                }
            }
        }
    }

    #[test]
    fn hypothesis_flags_reported_not_enforced() {
        let b = evaluate_bound(BoundVariant::Thm4Upper, &params(10, 2, 5));
        assert!(!b.all_met());
        assert!(b.hypotheses.iter().any(|h| h.name.contains("min_degree") && !h.met));

        let b = evaluate_bound(BoundVariant::Thm4Lower, &params(27, 3, 8));
        assert!(!b.all_met()); // 19 not divisible by 4
    }

    #[test]
    fn thm63_lower_hypotheses() {
        // q = 4, k = 1, ell = 2: n = 41, maximum degree 6
        let b = evaluate_bound(BoundVariant::Thm63Lower, &params(41, 3, 6));
        assert!(b.all_met());
        let b = evaluate_bound(BoundVariant::Thm63Lower, &params(42, 3, 6));
        assert!(!b.all_met());
    }

    #[test]
    fn weighted_path_bound_examples() {
        assert_eq!(weighted_path_bound(&int(12), 3).unwrap(), frac(15, 11));
        assert_eq!(weighted_path_bound(&int(10), 5).unwrap(), frac(5, 9));
        assert_eq!(weighted_path_bound(&int(8), 8).unwrap(), int(0));
        assert!(matches!(
            weighted_path_bound(&int(10), 3),
            Err(Error::NotAMultiple(_, 3))
        ));
        assert!(weighted_path_bound(&int(1), 1).is_err());
    }

    #[test]
    fn weighted_path_bound_decreases_in_k() {
        for n in 2..=120u64 {
            let divisors: Vec<u64> = (1..=n).filter(|k| n % k == 0).collect();
            for pair in divisors.windows(2) {
                let a = weighted_path_bound(&int(n as i64), pair[0]).unwrap();
                let b = weighted_path_bound(&int(n as i64), pair[1]).unwrap();
                assert!(a > b, "N={n}, k={} vs {}", pair[0], pair[1]);
            }
        }
    }

    #[test]
    fn improves_on_kouider_winkler_for_large_max_degree() {
        for n in (40u64..=300).step_by(7) {
            let p = params(n, 3, n / 2);
            let new = evaluate_bound(BoundVariant::Thm4Upper, &p).value;
            let old = evaluate_bound(BoundVariant::KouiderWinkler, &p).value;
            assert!(new < old, "n = {n}");
        }
    }

    #[test]
    fn independent_big_integer_recomputation() {
        // thm4_upper as a single fraction: [N(N-1)(n+2D) + 4 n(n-1)(d+1)] / [n(n-1)(d+1)]
        for (n, dmin, dmax) in [(28u64, 3u64, 8u64), (60, 4, 21), (100, 3, 50)] {
            let p = params(n, dmin, dmax);
            let got = evaluate_bound(BoundVariant::Thm4Upper, &p).value;
            let nn = BigInt::from(p.reduced_order());
            let numer = &nn * (&nn - 1) * BigInt::from(n + 2 * dmax)
                + BigInt::from(4u64) * n * (n - 1) * (dmin + 1);
            let denom = BigInt::from(n) * (n - 1) * (dmin + 1);
            assert_eq!(got, Rational::new(numer, denom));
        }
    }
}
