//! Upper bounds on the order of the Schur multiplier `M(G)` of a finite
//! p-group, evaluated from group invariants.
//!
//! Every bound has the form `|M(G)| <= p^x` (or `|γ₂(G)||M(G)| <= p^x`).
//! Exponents are kept as exact rationals; since the order is a power of `p`
//! the floor of `x` is an equally valid exponent and is reported alongside.
//! Group-theoretic hypotheses that cannot be read off the numeric inputs
//! (nilpotency class, "special", vanishing restriction maps) are listed in
//! the report as assumptions the caller vouches for.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::extremal::{choose2, choose3, triangular_decompose};

pub type Exponent = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the bound requires p != 2, 3 (got p = {0})")]
    SmallPrime(u64),
    #[error("invalid parameters: {0}")]
    Domain(String),
    #[error("invalid abelian invariants: {0}")]
    BadInvariants(String),
    #[error(
        "exponent {0} is negative; the inputs cannot come from a group satisfying the hypotheses"
    )]
    NegativeExponent(String),
}

fn domain(msg: impl Into<String>) -> SchurError {
    SchurError::Domain(msg.into())
}

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn check_prime(p: u64) -> Result<(), SchurError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(SchurError::NotPrime(p))
    }
}

fn check_large_prime(p: u64) -> Result<(), SchurError> {
    check_prime(p)?;
    if p == 2 || p == 3 {
        Err(SchurError::SmallPrime(p))
    } else {
        Ok(())
    }
}

/// Abelian invariants `α_1 >= ... >= α_d >= 1`.
fn check_invariants(alpha: &[u64], d: Option<u64>) -> Result<(), SchurError> {
    if let Some(d) = d {
        if alpha.len() as u64 != d {
            return Err(SchurError::BadInvariants(format!(
                "expected {d} invariants, got {}",
                alpha.len()
            )));
        }
    }
    if alpha.is_empty() {
        return Err(SchurError::BadInvariants("empty list".into()));
    }
    if alpha.contains(&0) {
        return Err(SchurError::BadInvariants(
            "invariants must be positive".into(),
        ));
    }
    if alpha.windows(2).any(|w| w[0] < w[1]) {
        return Err(SchurError::BadInvariants(format!(
            "{alpha:?} is not non-increasing"
        )));
    }
    Ok(())
}

/// Invariants of a finite p-group of order `p^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupProfile {
    pub p: u64,
    /// `|G| = p^n`.
    pub n: u64,
    /// Minimal number of generators.
    pub d: u64,
    /// `|γ₂G| = p^k`.
    pub k: u64,
    /// Nilpotency class.
    pub c: Option<u64>,
    /// `d(G/Z(G))`.
    pub delta: Option<u64>,
    /// Exponent of `G^ab` is `p^e`.
    pub e: Option<u64>,
    /// `G^ab = C_{p^α_1} × ... × C_{p^α_d}`.
    pub alpha: Option<Vec<u64>>,
}

impl GroupProfile {
    pub fn validate(&self) -> Result<(), SchurError> {
        check_prime(self.p)?;
        if self.n < 1 || self.d < 1 || self.d > self.n || self.k > self.n {
            return Err(domain(format!(
                "need n >= 1, 1 <= d <= n, k <= n (n={}, d={}, k={})",
                self.n, self.d, self.k
            )));
        }
        if let Some(c) = self.c {
            if c > self.n {
                return Err(domain(format!("class {c} exceeds n = {}", self.n)));
            }
        }
        if let Some(alpha) = &self.alpha {
            check_invariants(alpha, Some(self.d))?;
            let total: u64 = alpha.iter().sum();
            if total != self.n - self.k {
                return Err(SchurError::BadInvariants(format!(
                    "invariants sum to {total}, but |G^ab| = p^{}",
                    self.n - self.k
                )));
            }
            if let Some(e) = self.e {
                if alpha[0] != e {
                    return Err(SchurError::BadInvariants(format!(
                        "α_1 = {} disagrees with exponent e = {e}",
                        alpha[0]
                    )));
                }
            }
        }
        Ok(())
    }

    /// `n - c`, when the class is known.
    pub fn coclass(&self) -> Option<u64> {
        self.c.map(|c| self.n - c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BoundTarget {
    #[serde(rename = "M(G)")]
    Multiplier,
    #[serde(rename = "γ₂(G)·M(G)")]
    DerivedTimesMultiplier,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FormulaId {
    Special,
    Nil3,
    Simple,
    Sharpened,
    NonHomocyclic,
    Vermani,
    Coclass,
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FormulaId::Special => "special",
            FormulaId::Nil3 => "nil3",
            FormulaId::Simple => "simple",
            FormulaId::Sharpened => "sharpened",
            FormulaId::NonHomocyclic => "nonhomocyclic",
            FormulaId::Vermani => "vermani",
            FormulaId::Coclass => "coclass",
        };
        f.write_str(s)
    }
}

fn inputs_as_map<S: Serializer>(
    inputs: &[(&'static str, InputValue)],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_map(inputs.iter().map(|(k, v)| (*k, v)))
}

fn ratio_as_fraction<S: Serializer>(x: &Exponent, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_fraction(x))
}

/// Always `num/den`, e.g. `6/1`, `1/2`.
pub fn format_fraction(x: &Exponent) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum InputValue {
    Int(u64),
    List(Vec<u64>),
}

/// A further exponent reported next to the main one (a specialization).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SecondaryBound {
    pub label: &'static str,
    #[serde(serialize_with = "ratio_as_fraction")]
    pub exponent_rational: Exponent,
    pub exponent_floor: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub formula_id: FormulaId,
    #[serde(serialize_with = "inputs_as_map")]
    pub inputs: Vec<(&'static str, InputValue)>,
    #[serde(serialize_with = "ratio_as_fraction")]
    pub exponent_rational: Exponent,
    pub exponent_floor: i64,
    pub bound_on: BoundTarget,
    pub assumptions: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub secondary: Option<SecondaryBound>,
}

impl BoundReport {
    fn new(
        formula_id: FormulaId,
        inputs: Vec<(&'static str, InputValue)>,
        exponent: Exponent,
        bound_on: BoundTarget,
        assumptions: Vec<&'static str>,
    ) -> Result<Self, SchurError> {
        if exponent < Exponent::from_integer(0) {
            return Err(SchurError::NegativeExponent(format_fraction(&exponent)));
        }
        Ok(Self {
            formula_id,
            inputs,
            exponent_rational: exponent,
            exponent_floor: exponent.floor().to_integer(),
            bound_on,
            assumptions,
            secondary: None,
        })
    }

    fn with_secondary(mut self, label: &'static str, exponent: Exponent) -> Self {
        self.secondary = Some(SecondaryBound {
            label,
            exponent_rational: exponent,
            exponent_floor: exponent.floor().to_integer(),
        });
        self
    }
}

fn int(x: u64) -> Exponent {
    Exponent::from_integer(x as i64)
}

fn half(x: i64) -> Exponent {
    Exponent::new(x, 2)
}

fn delta_penalty(delta: u64) -> Exponent {
    let delta = delta as i64;
    int(((delta - 2).max(0) + (delta - 3).max(1)) as u64)
}

/// Special p-group of rank `k` with `d` generators:
/// `d(d+2k-1)/2 - k - C(d,3) + C(r,3) + C(t,2)` where `C(d,2) - k = C(r,2) + t`.
pub fn special_bound(p: u64, d: u64, k: u64) -> Result<BoundReport, SchurError> {
    check_prime(p)?;
    if d < 2 {
        return Err(domain(format!("d = {d}, need d >= 2")));
    }
    if k < 2 || k > choose2(d) {
        return Err(domain(format!(
            "rank k = {k} outside [2, C({d},2) = {}]",
            choose2(d)
        )));
    }
    let dec = triangular_decompose(choose2(d) - k);
    // d(d+2k-1)/2 = C(d,2) + dk, an integer
    let exponent = int(choose2(d) + d * k) - int(k) - int(choose3(d))
        + int(choose3(dec.r))
        + int(choose2(dec.t));
    BoundReport::new(
        FormulaId::Special,
        vec![
            ("p", InputValue::Int(p)),
            ("d", InputValue::Int(d)),
            ("k", InputValue::Int(k)),
        ],
        exponent,
        BoundTarget::Multiplier,
        vec!["G is a special p-group of rank k with d(G) = d"],
    )
}

/// Ellis–Wiegold exponent `d(n-k-e)/2 + (δ-1)k - max(0, δ-2)`, the baseline
/// that [`nil3_bound`] improves on.
pub fn ellis_wiegold_exponent(d: u64, n: u64, k: u64, e: u64, delta: u64) -> Exponent {
    half(d as i64 * (n as i64 - k as i64 - e as i64))
        + Exponent::from_integer((delta as i64 - 1) * k as i64)
        - Exponent::from_integer((delta as i64 - 2).max(0))
}

fn check_nonnegative(what: &str, x: i64) -> Result<(), SchurError> {
    if x < 0 {
        Err(domain(format!("{what} = {x} must be non-negative")))
    } else {
        Ok(())
    }
}

/// Class >= 3, `p != 2, 3`:
/// `d(n-k-e)/2 + (δ-1)k - max(0, δ-2) - max(1, δ-3)`.
pub fn nil3_bound(
    p: u64,
    d: u64,
    n: u64,
    k: u64,
    e: u64,
    delta: u64,
) -> Result<BoundReport, SchurError> {
    check_large_prime(p)?;
    if delta < 1 {
        return Err(domain("delta must be at least 1"));
    }
    check_nonnegative("n - k - e", n as i64 - k as i64 - e as i64)?;
    let exponent =
        half(d as i64 * (n - k - e) as i64) + int((delta - 1) * k) - delta_penalty(delta);
    BoundReport::new(
        FormulaId::Nil3,
        vec![
            ("p", InputValue::Int(p)),
            ("d", InputValue::Int(d)),
            ("n", InputValue::Int(n)),
            ("k", InputValue::Int(k)),
            ("e", InputValue::Int(e)),
            ("delta", InputValue::Int(delta)),
        ],
        exponent,
        BoundTarget::Multiplier,
        vec!["nilpotency class c >= 3"],
    )
}

/// Class >= 3, `p != 2, 3`: `(d-1)(n-k-2)/2`.
pub fn simple_nil3_bound(p: u64, d: u64, n: u64, k: u64) -> Result<BoundReport, SchurError> {
    check_large_prime(p)?;
    if d < 1 {
        return Err(domain("d must be at least 1"));
    }
    check_nonnegative("n - k - 2", n as i64 - k as i64 - 2)?;
    let exponent = half((d as i64 - 1) * (n as i64 - k as i64 - 2));
    BoundReport::new(
        FormulaId::Simple,
        vec![
            ("p", InputValue::Int(p)),
            ("d", InputValue::Int(d)),
            ("n", InputValue::Int(n)),
            ("k", InputValue::Int(k)),
        ],
        exponent,
        BoundTarget::Multiplier,
        vec!["nilpotency class c >= 3"],
    )
}

/// Class >= 3, `p != 2, 3`:
/// `(d-1)(n-k-(α_1-α_d))/2 + (δ-1)k - max(0, δ-2) - max(1, δ-3)`.
pub fn sharpened_nil3_bound(
    p: u64,
    d: u64,
    n: u64,
    k: u64,
    delta: u64,
    alpha: &[u64],
) -> Result<BoundReport, SchurError> {
    check_large_prime(p)?;
    check_invariants(alpha, Some(d))?;
    if delta < 1 {
        return Err(domain("delta must be at least 1"));
    }
    let spread = (alpha[0] - alpha[alpha.len() - 1]) as i64;
    let exponent = half((d as i64 - 1) * (n as i64 - k as i64 - spread)) + int((delta - 1) * k)
        - delta_penalty(delta);
    BoundReport::new(
        FormulaId::Sharpened,
        vec![
            ("p", InputValue::Int(p)),
            ("d", InputValue::Int(d)),
            ("n", InputValue::Int(n)),
            ("k", InputValue::Int(k)),
            ("delta", InputValue::Int(delta)),
            ("alpha", InputValue::List(alpha.to_vec())),
        ],
        exponent,
        BoundTarget::Multiplier,
        vec!["nilpotency class c >= 3"],
    )
}

/// Class >= 3, `p != 2, 3`: `(d-1)(n+k-2-(α_1-α_d))/2`; when `G^ab` is not
/// homocyclic the secondary exponent `(d-1)(n+k-3)/2` is also reported.
pub fn non_homocyclic_bound(
    p: u64,
    d: u64,
    n: u64,
    k: u64,
    alpha: &[u64],
) -> Result<BoundReport, SchurError> {
    check_large_prime(p)?;
    check_invariants(alpha, Some(d))?;
    let spread = (alpha[0] - alpha[alpha.len() - 1]) as i64;
    let (d, n, k) = (d as i64, n as i64, k as i64);
    let report = BoundReport::new(
        FormulaId::NonHomocyclic,
        vec![
            ("p", InputValue::Int(p)),
            ("d", InputValue::Int(d as u64)),
            ("n", InputValue::Int(n as u64)),
            ("k", InputValue::Int(k as u64)),
            ("alpha", InputValue::List(alpha.to_vec())),
        ],
        half((d - 1) * (n + k - 2 - spread)),
        BoundTarget::Multiplier,
        vec!["nilpotency class c >= 3"],
    )?;
    Ok(if spread > 0 {
        report.with_secondary("not_homocyclic", half((d - 1) * (n + k - 3)))
    } else {
        report
    })
}

/// `log_p |A ⊗ B|` for abelian p-groups with invariants `alpha`, `beta`:
/// `Σ min(α_i, β_j)`.
pub fn abelian_tensor_exponent(alpha: &[u64], beta: &[u64]) -> u64 {
    alpha
        .iter()
        .flat_map(|&a| beta.iter().map(move |&b| a.min(b)))
        .sum()
}

/// Class >= 4, `K` central with vanishing restriction `M(G) -> M(K)`,
/// `|G/K| = p^m`, `|γ₂(G)K/K| = p^r_sub`:
/// `|γ₂G||M(G)| <= p^(tensor + d(G/K)(m + r_sub - 2)/2)`, with the
/// specialization `d(G/K) -> m - r_sub` as the secondary exponent.
pub fn vermani_improved_bound(
    p: u64,
    m: u64,
    r_sub: u64,
    d_quot: u64,
    tensor_exponent: u64,
) -> Result<BoundReport, SchurError> {
    check_prime(p)?;
    if m < r_sub {
        return Err(domain(format!("m = {m} < r_sub = {r_sub}")));
    }
    if m + r_sub < 2 {
        return Err(domain(format!(
            "m + r_sub = {} < 2 is impossible for a quotient of class >= 3",
            m + r_sub
        )));
    }
    let spread = (m + r_sub - 2) as i64;
    let report = BoundReport::new(
        FormulaId::Vermani,
        vec![
            ("p", InputValue::Int(p)),
            ("m", InputValue::Int(m)),
            ("r_sub", InputValue::Int(r_sub)),
            ("d_quot", InputValue::Int(d_quot)),
            ("tensor_exponent", InputValue::Int(tensor_exponent)),
        ],
        int(tensor_exponent) + half(d_quot as i64 * spread),
        BoundTarget::DerivedTimesMultiplier,
        vec![
            "nilpotency class c >= 4",
            "K is central and the restriction M(G) -> M(K) is zero",
            "tensor_exponent = log_p |(G/K)^ab ⊗ K|",
        ],
    )?;
    Ok(report.with_secondary(
        "d_quot = m - r_sub",
        int(tensor_exponent) + half((m - r_sub) as i64 * spread),
    ))
}

/// Coclass `r`, class > 2, `p != 2, 3`: `(r² - r)/2 + kr`.
pub fn coclass_bound(p: u64, coclass_r: u64, k: u64) -> Result<BoundReport, SchurError> {
    check_large_prime(p)?;
    if k < 1 {
        return Err(domain("k must be at least 1"));
    }
    // r² - r is even, so this is an integer
    let exponent = int(choose2(coclass_r) + k * coclass_r);
    BoundReport::new(
        FormulaId::Coclass,
        vec![
            ("p", InputValue::Int(p)),
            ("coclass", InputValue::Int(coclass_r)),
            ("k", InputValue::Int(k)),
        ],
        exponent,
        BoundTarget::Multiplier,
        vec!["nilpotency class c >= 3"],
    )
}

/// Groups of order `3^order_exp` whose multipliers were reported to attain
/// [`special_bound`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub group_id: u64,
    pub order_exponent: u64,
    pub d: u64,
    pub k: u64,
    pub reported_exponent: i64,
    pub computed: BoundReport,
    pub matches: bool,
}

/// (GroupId, order exponent, d, rank, reported `log_3 |M(G)|`).
pub const TABLE1: [(u64, u64, u64, u64, i64); 4] = [
    (37, 5, 3, 2, 6),
    (122, 6, 3, 3, 8),
    (6477, 7, 4, 3, 12),
    (263726, 8, 4, 4, 14),
];

pub fn table1() -> Vec<Table1Row> {
    TABLE1
        .iter()
        .map(|&(group_id, order_exponent, d, k, reported_exponent)| {
            let computed = special_bound(3, d, k).expect("table parameters are valid");
            Table1Row {
                group_id,
                order_exponent,
                d,
                k,
                reported_exponent,
                matches: computed.exponent_rational == Exponent::from_integer(reported_exponent),
                computed,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HatuiCheck {
    pub holds: bool,
    /// First `(d, computed, expected)` that disagrees.
    pub witness: Option<(u64, String, u64)>,
}

/// Checks `special_bound(d, k = 2) = d(d-1)/2 + 3` for every `d` in the range.
pub fn hatui_consistency_check(
    d_range: impl IntoIterator<Item = u64>,
) -> Result<HatuiCheck, SchurError> {
    for d in d_range {
        if d < 3 {
            return Err(domain(format!("d = {d}, need d >= 3")));
        }
        let got = special_bound(3, d, 2)?.exponent_rational;
        let want = choose2(d) + 3;
        if got != int(want) {
            return Ok(HatuiCheck {
                holds: false,
                witness: Some((d, format_fraction(&got), want)),
            });
        }
    }
    Ok(HatuiCheck {
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(r: &BoundReport) -> Exponent {
        r.exponent_rational
    }

    #[test]
    fn special_examples() {
        assert_eq!(ex(&special_bound(3, 3, 2).unwrap()), int(6));
        assert_eq!(ex(&special_bound(3, 4, 4).unwrap()), int(14));
        assert_eq!(ex(&special_bound(3, 3, 3).unwrap()), int(8));
        assert_eq!(ex(&special_bound(3, 4, 3).unwrap()), int(12));
        assert!(special_bound(3, 3, 1).is_err());
        assert!(special_bound(3, 3, 4).is_err());
        assert!(special_bound(3, 1, 2).is_err());
        assert_eq!(special_bound(4, 3, 2), Err(SchurError::NotPrime(4)));
    }

    #[test]
    fn special_sweep_is_integral_and_nonnegative() {
        for d in 2..=12 {
            for k in 2..=choose2(d) {
                let r = special_bound(5, d, k).unwrap();
                assert!(r.exponent_rational.is_integer(), "d={d} k={k}");
                assert!(r.exponent_floor >= 0);
            }
        }
    }

    #[test]
    fn nil3_examples() {
        assert_eq!(ex(&nil3_bound(5, 2, 5, 2, 1, 2).unwrap()), int(3));
        assert_eq!(ex(&nil3_bound(5, 3, 7, 2, 1, 3).unwrap()), int(8));
        assert_eq!(delta_penalty(4), int(3));
        assert_eq!(delta_penalty(2), int(1));
        assert_eq!(nil3_bound(3, 2, 5, 2, 1, 2), Err(SchurError::SmallPrime(3)));
        assert_eq!(nil3_bound(2, 2, 5, 2, 1, 2), Err(SchurError::SmallPrime(2)));
        assert!(nil3_bound(5, 2, 5, 4, 2, 2).is_err());
    }

    #[test]
    fn simple_examples() {
        let r = simple_nil3_bound(5, 2, 5, 2).unwrap();
        assert_eq!(ex(&r), Exponent::new(1, 2));
        assert_eq!(r.exponent_floor, 0);
        assert_eq!(ex(&simple_nil3_bound(5, 3, 8, 3).unwrap()), int(3));
        assert_eq!(ex(&simple_nil3_bound(7, 4, 10, 4).unwrap()), int(6));
    }

    #[test]
    fn sharpened_examples() {
        assert_eq!(
            ex(&sharpened_nil3_bound(5, 3, 7, 2, 3, &[2, 1, 1]).unwrap()),
            int(6)
        );
        // homocyclic: spread term vanishes, 2*5/2 + 4 - 1 - 1
        assert_eq!(
            ex(&sharpened_nil3_bound(5, 3, 7, 2, 3, &[1, 1, 1]).unwrap()),
            int(7)
        );
        // delta = 2: penalties 0 and 1
        assert_eq!(
            ex(&sharpened_nil3_bound(5, 2, 6, 2, 2, &[2, 2]).unwrap()),
            int(2 + 2 - 1)
        );
        assert!(matches!(
            sharpened_nil3_bound(5, 3, 7, 2, 3, &[1, 2, 1]),
            Err(SchurError::BadInvariants(_))
        ));
        assert!(matches!(
            sharpened_nil3_bound(5, 3, 7, 2, 3, &[2, 1]),
            Err(SchurError::BadInvariants(_))
        ));
    }

    #[test]
    fn non_homocyclic_examples() {
        let r = non_homocyclic_bound(5, 2, 5, 2, &[2, 1]).unwrap();
        assert!(r.secondary.is_some());
        let r = non_homocyclic_bound(5, 2, 6, 2, &[2, 2]).unwrap();
        assert!(r.secondary.is_none());
        let r = non_homocyclic_bound(5, 3, 7, 2, &[2, 1, 1]).unwrap();
        assert_eq!(ex(&r), int(6));
        assert_eq!(r.secondary.unwrap().exponent_rational, int(6));
    }

    #[test]
    fn vermani_examples() {
        let r = vermani_improved_bound(5, 3, 1, 2, 2).unwrap();
        assert_eq!(ex(&r), int(4));
        assert_eq!(r.bound_on, BoundTarget::DerivedTimesMultiplier);
        let r = vermani_improved_bound(5, 5, 2, 3, 1).unwrap();
        assert_eq!(r.secondary.as_ref().unwrap().exponent_rational, ex(&r));
        assert!(vermani_improved_bound(5, 1, 2, 1, 0).is_err());
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(abelian_tensor_exponent(&[1], &[1]), 1);
        assert_eq!(abelian_tensor_exponent(&[2, 1], &[1]), 2);
        assert_eq!(abelian_tensor_exponent(&[3], &[]), 0);
    }

    #[test]
    fn coclass_examples() {
        assert_eq!(ex(&coclass_bound(5, 2, 3).unwrap()), int(7));
        assert_eq!(ex(&coclass_bound(5, 0, 4).unwrap()), int(0));
        assert_eq!(ex(&coclass_bound(7, 3, 2).unwrap()), int(9));
        assert_eq!(coclass_bound(2, 3, 2), Err(SchurError::SmallPrime(2)));
    }

    #[test]
    fn hatui_examples() {
        for (d, want) in [(3, 6), (4, 9), (5, 13)] {
            assert_eq!(ex(&special_bound(3, d, 2).unwrap()), int(want));
        }
        assert!(hatui_consistency_check(3..=12).unwrap().holds);
        assert!(hatui_consistency_check([2]).is_err());
    }

    #[test]
    fn table1_matches() {
        assert!(table1().iter().all(|row| row.matches));
    }

    #[test]
    fn profile_validation() {
        let mut g = GroupProfile {
            p: 5,
            n: 7,
            d: 3,
            k: 2,
            c: Some(3),
            delta: Some(3),
            e: Some(2),
            alpha: Some(vec![2, 2, 1]),
        };
        assert_eq!(g.validate(), Ok(()));
        assert_eq!(g.coclass(), Some(4));
        g.alpha = Some(vec![2, 1, 1]);
        assert!(matches!(g.validate(), Err(SchurError::BadInvariants(_))));
        g.alpha = Some(vec![3, 1, 1]);
        assert!(matches!(g.validate(), Err(SchurError::BadInvariants(_))));
        g.alpha = None;
        g.p = 9;
        assert_eq!(g.validate(), Err(SchurError::NotPrime(9)));
    }

    #[test]
    fn fraction_format() {
        assert_eq!(format_fraction(&int(6)), "6/1");
        assert_eq!(format_fraction(&Exponent::new(1, 2)), "1/2");
    }
}
