//! Exact coefficient arithmetic for Euler factors.
//!
//! Every inverse root that shows up in the factor formulas is a root of unity
//! times a rational power of `q`. [`Scalar`] stores exactly that pair, so
//! equality, least common multiples and divisibility of Euler factors reduce
//! to multiset operations on structurally comparable values.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

pub type Rational = Ratio<i64>;

/// `ζ·q^e` with `ζ = exp(2πi·zeta)`, `zeta ∈ [0, 1)` and `e` rational.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    zeta: Rational,
    qexp: Rational,
}

fn reduce_mod_one(r: Rational) -> Rational {
    r - r.floor()
}

impl Scalar {
    pub fn new(zeta: Rational, qexp: Rational) -> Self {
        Scalar {
            zeta: reduce_mod_one(zeta),
            qexp,
        }
    }

    pub fn one() -> Self {
        Scalar::new(Rational::zero(), Rational::zero())
    }

    /// `q^e`.
    pub fn q_pow(e: Rational) -> Self {
        Scalar::new(Rational::zero(), e)
    }

    pub fn q_int(e: i64) -> Self {
        Scalar::q_pow(Rational::from_integer(e))
    }

    /// `exp(2πi k/n)`.
    pub fn root_of_unity(k: i64, n: i64) -> Self {
        Scalar::new(Rational::new(k, n), Rational::zero())
    }

    /// The `n` distinct `n`-th roots of unity, in canonical order.
    pub fn roots_of_unity(n: u32) -> Vec<Scalar> {
        let n = i64::from(n.max(1));
        let mut out: Vec<Scalar> = (0..n).map(|k| Scalar::root_of_unity(k, n)).collect();
        out.sort();
        out
    }

    pub fn zeta(&self) -> Rational {
        self.zeta
    }

    pub fn qexp(&self) -> Rational {
        self.qexp
    }

    pub fn is_one(&self) -> bool {
        self.zeta.is_zero() && self.qexp.is_zero()
    }

    /// True when the value is a root of unity (no `q`-power part).
    pub fn is_torsion(&self) -> bool {
        self.qexp.is_zero()
    }

    pub fn inv(&self) -> Self {
        Scalar::new(-self.zeta, -self.qexp)
    }

    pub fn pow(&self, n: i64) -> Self {
        let n = Rational::from_integer(n);
        Scalar::new(self.zeta * n, self.qexp * n)
    }

    /// Torsion part only.
    pub fn torsion(&self) -> Self {
        Scalar::new(self.zeta, Rational::zero())
    }

    /// True if `self^n = 1` for some `n` dividing `f`, i.e. `self ∈ μ_f`.
    pub fn in_mu(&self, f: u32) -> bool {
        self.is_torsion() && (self.zeta * Rational::from_integer(i64::from(f))).is_integer()
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::one()
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.zeta + rhs.zeta, self.qexp + rhs.qexp)
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        Scalar::new(self.zeta - rhs.zeta, self.qexp - rhs.qexp)
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.zeta.denom(), self.zeta.numer(), self.qexp).cmp(&(
            other.zeta.denom(),
            other.zeta.numer(),
            other.qexp,
        ))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Always `p/q`, used for the JSON forms.
pub(crate) fn fmt_fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::with_capacity(2);
        if !self.zeta.is_zero() {
            parts.push(format!("z({}/{})", self.zeta.numer(), self.zeta.denom()));
        }
        if !self.qexp.is_zero() {
            parts.push(format!("q^({})", fmt_rational(&self.qexp)));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Parses `p/q`, `p`, with an optional sign on `p`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: i64 = num
        .parse()
        .map_err(|_| format!("invalid numerator in fraction {s:?}"))?;
    if den.starts_with(['+', '-']) {
        return Err(format!("signed denominator in fraction {s:?}"));
    }
    let den: i64 = den
        .parse()
        .map_err(|_| format!("invalid denominator in fraction {s:?}"))?;
    if den == 0 {
        return Err(format!("zero denominator in fraction {s:?}"));
    }
    Ok(Rational::new(num, den))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScalarRepr {
    zeta: String,
    qexp: String,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ScalarRepr {
            zeta: fmt_fraction(&self.zeta),
            qexp: fmt_fraction(&self.qexp),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        let zeta = parse_rational(&repr.zeta).map_err(serde::de::Error::custom)?;
        let qexp = parse_rational(&repr.qexp).map_err(serde::de::Error::custom)?;
        Ok(Scalar::new(zeta, qexp))
    }
}

/// `∏ (1 - α X)^{-1}` over a multiset of inverse roots `α`, with `X = q^{-s}`.
///
/// Roots are kept sorted by the canonical [`Scalar`] order, so two factors are
/// equal exactly when their multisets agree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "FactorRepr", into = "FactorRepr")]
pub struct EulerFactor {
    roots: Vec<Scalar>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorRepr {
    roots: Vec<Scalar>,
}

impl From<EulerFactor> for FactorRepr {
    fn from(f: EulerFactor) -> Self {
        FactorRepr { roots: f.roots }
    }
}

impl TryFrom<FactorRepr> for EulerFactor {
    type Error = String;
    fn try_from(r: FactorRepr) -> Result<Self, String> {
        Ok(EulerFactor::from_roots(r.roots))
    }
}

impl EulerFactor {
    /// The constant factor `1`.
    pub fn one() -> Self {
        EulerFactor { roots: Vec::new() }
    }

    pub fn from_roots<I: IntoIterator<Item = Scalar>>(roots: I) -> Self {
        let mut roots: Vec<Scalar> = roots.into_iter().collect();
        roots.sort();
        EulerFactor { roots }
    }

    fn from_counts(counts: &BTreeMap<Scalar, usize>) -> Self {
        let roots = counts
            .iter()
            .flat_map(|(a, &n)| std::iter::repeat_n(*a, n))
            .collect();
        EulerFactor { roots }
    }

    fn counts(&self) -> BTreeMap<Scalar, usize> {
        let mut m = BTreeMap::new();
        for a in &self.roots {
            *m.entry(*a).or_insert(0) += 1;
        }
        m
    }

    pub fn roots(&self) -> &[Scalar] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn is_one(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn multiplicity(&self, a: &Scalar) -> usize {
        self.roots.iter().filter(|b| *b == a).count()
    }

    /// Distinct roots, ascending.
    pub fn distinct(&self) -> Vec<Scalar> {
        let mut v = self.roots.clone();
        v.dedup();
        v
    }

    /// Multiset union.
    pub fn product<'a, I: IntoIterator<Item = &'a EulerFactor>>(fs: I) -> Self {
        EulerFactor::from_roots(fs.into_iter().flat_map(|f| f.roots.iter().copied()))
    }

    pub fn mul(&self, other: &EulerFactor) -> Self {
        EulerFactor::product([self, other])
    }

    /// Multiplies every root by `c`.
    pub fn twist(&self, c: Scalar) -> Self {
        EulerFactor::from_roots(self.roots.iter().map(|a| *a * c))
    }

    /// `L(s) ↦ L(s + s₀)` where `c = q^{s₀}`: every root `α` becomes `α·c⁻¹`.
    pub fn shift(&self, c: Scalar) -> Self {
        self.twist(c.inv())
    }

    /// Per-root maximum multiplicity: the lcm of the inverse polynomials.
    pub fn lcm<'a, I: IntoIterator<Item = &'a EulerFactor>>(fs: I) -> Self {
        let mut acc: BTreeMap<Scalar, usize> = BTreeMap::new();
        for f in fs {
            for (a, n) in f.counts() {
                let e = acc.entry(a).or_insert(0);
                *e = (*e).max(n);
            }
        }
        EulerFactor::from_counts(&acc)
    }

    /// Sub-multiset test.
    pub fn contains(&self, sub: &EulerFactor) -> bool {
        let mine = self.counts();
        sub.counts()
            .iter()
            .all(|(a, n)| mine.get(a).is_some_and(|m| m >= n))
    }

    pub fn is_disjoint(&self, other: &EulerFactor) -> bool {
        let mine = self.counts();
        other.roots.iter().all(|a| !mine.contains_key(a))
    }

    /// Multiset difference `self / den`; fails unless `den ⊆ self`.
    pub fn divide(&self, den: &EulerFactor) -> Result<EulerFactor, Error> {
        let mut counts = self.counts();
        for a in &den.roots {
            match counts.get_mut(a) {
                Some(n) if *n > 0 => *n -= 1,
                _ => {
                    return Err(Error::NotDivisible {
                        num: self.clone(),
                        den: den.clone(),
                    })
                }
            }
        }
        Ok(EulerFactor::from_counts(&counts))
    }

    /// Removes the common sub-multiset of `a` and `b` from both.
    fn cancel(a: &EulerFactor, b: &EulerFactor) -> (EulerFactor, EulerFactor) {
        let mut ca = a.counts();
        let mut cb = b.counts();
        for (root, na) in ca.iter_mut() {
            if let Some(nb) = cb.get_mut(root) {
                let m = (*na).min(*nb);
                *na -= m;
                *nb -= m;
            }
        }
        (EulerFactor::from_counts(&ca), EulerFactor::from_counts(&cb))
    }

    /// Re-expresses a factor evaluated at `1 - s` in the variable `q^{-s}`:
    /// `(1 - β q^{s-1})` equals `(1 - β⁻¹ q · q^{-s})` up to a unit.
    pub fn reflect(&self) -> EulerFactor {
        let q = Scalar::q_int(1);
        EulerFactor::from_roots(self.roots.iter().map(|b| b.inv() * q))
    }
}

impl fmt::Display for EulerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.roots.is_empty() {
            return f.write_str("1");
        }
        let terms: Vec<String> = self
            .roots
            .iter()
            .map(|a| {
                if a.is_one() {
                    "(1 - X)^-1".to_string()
                } else {
                    format!("(1 - {a} X)^-1")
                }
            })
            .collect();
        f.write_str(&terms.join(" "))
    }
}

/// `γ = ε·L(1-s, ·)/L(s, ·)` modulo units of `ℂ[q^{±s}]`.
///
/// `num` holds the inverse roots of the `L(1-s)` factor rewritten in `q^{-s}`,
/// `den` those of the `L(s)` factor; the two never share a root.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct GammaClass {
    num: EulerFactor,
    den: EulerFactor,
}

impl GammaClass {
    pub fn new(num: &EulerFactor, den: &EulerFactor) -> Self {
        let (num, den) = EulerFactor::cancel(num, den);
        GammaClass { num, den }
    }

    pub fn trivial() -> Self {
        GammaClass::default()
    }

    /// Builds the class from `L(1-s, π^ι)` and `L(s, π)`.
    pub fn normalize(at_one_minus_s: &EulerFactor, at_s: &EulerFactor) -> Self {
        GammaClass::new(&at_one_minus_s.reflect(), at_s)
    }

    pub fn num(&self) -> &EulerFactor {
        &self.num
    }

    pub fn den(&self) -> &EulerFactor {
        &self.den
    }

    pub fn is_trivial(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn mul(&self, other: &GammaClass) -> Self {
        GammaClass::new(&self.num.mul(&other.num), &self.den.mul(&other.den))
    }

    pub fn product<'a, I: IntoIterator<Item = &'a GammaClass>>(gs: I) -> Self {
        gs.into_iter()
            .fold(GammaClass::trivial(), |acc, g| acc.mul(g))
    }

    /// The class of `s ↦ γ(1 - s)`.
    pub fn reflect(&self) -> Self {
        GammaClass::new(&self.num.reflect(), &self.den.reflect())
    }
}

impl fmt::Display for GammaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.num, self.den)
    }
}
