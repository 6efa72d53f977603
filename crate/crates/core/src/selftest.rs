//! Seeded input generators and the invariant suite behind `lfactor selftest`.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dsl::{parse_repr, render};
use crate::galois::{langlands_agree, FormalParam};
use crate::lfun::{
    check_general_position, gamma_ext, gamma_ext_by_parts, l_ext_via_derivatives, l_rep_ext,
    l_rep_rs, l_rep_sym, l_seg_ext, l_seg_rs,
};
use crate::registry::{CuspidalDatum, DualData, Registry};
use crate::scalar::{EulerFactor, Rational, Scalar};
use crate::segment::{is_generic, Representation, Segment};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `ζ₁₂^k · q^e` with `|e| ≤ 3`.
pub fn random_satake(rng: &mut TestRng, m: usize) -> Vec<Scalar> {
    (0..m)
        .map(|_| {
            Scalar::root_of_unity(rng.gen_range(0..12), 12) * Scalar::q_int(rng.gen_range(-3..=3))
        })
        .collect()
}

/// A twist `q^{k/den}` with `|k/den| ≤ 2`, sometimes carrying a 12th root of unity.
pub fn random_twist(rng: &mut TestRng, den: i64) -> Scalar {
    let e = Scalar::q_pow(Rational::new(rng.gen_range(-2 * den..=2 * den), den));
    if rng.gen_bool(0.3) {
        e * Scalar::root_of_unity(rng.gen_range(0..12), 12)
    } else {
        e
    }
}

/// A segment of dimension at most `max_dim` over a label of `reg`, or
/// `None` if no label fits.
pub fn random_segment(
    rng: &mut TestRng,
    reg: &Registry,
    max_dim: u32,
    den: i64,
) -> Option<Segment> {
    let fitting: Vec<&CuspidalDatum> = reg.cuspidals().filter(|c| c.r <= max_dim).collect();
    let c = fitting.choose(rng)?;
    let len = rng.gen_range(1..=max_dim / c.r);
    Some(Segment::new(c.label.clone(), len, random_twist(rng, den)))
}

/// Up to `max_t` segments with total dimension at most `max_dim`.
pub fn random_representation(
    rng: &mut TestRng,
    reg: &Registry,
    max_t: usize,
    max_dim: u32,
) -> Representation {
    let t = rng.gen_range(1..=max_t);
    let mut left = max_dim;
    let mut segs = Vec::new();
    for _ in 0..t {
        match random_segment(rng, reg, left, 6) {
            Some(s) => {
                left -= s.dim(reg).expect("label from registry");
                segs.push(s);
            }
            None => break,
        }
    }
    Representation::new(segs).expect("max_dim admits a GL_1 or smaller label")
}

/// A generic representation with at most `max_t` segments passing every
/// general-position condition.
pub fn random_general_position(
    rng: &mut TestRng,
    reg: &Registry,
    max_t: usize,
    max_dim: u32,
) -> Representation {
    // fix t first so rejections do not skew the mix toward short inputs
    let t = rng.gen_range(1..=max_t);
    for _ in 0..100_000 {
        let mut left = max_dim;
        let mut segs = Vec::new();
        for i in 0..t {
            // leave at least one dimension for each later segment
            let room = left.saturating_sub((t - 1 - i) as u32);
            if let Some(s) = random_segment(rng, reg, room, 7) {
                left -= s.dim(reg).expect("label from registry");
                segs.push(s);
            }
        }
        if segs.len() != t {
            continue;
        }
        let p = Representation::new(segs).expect("t >= 1");
        if is_generic(reg, &p).unwrap_or(false)
            && check_general_position(reg, &p).is_ok_and(|r| r.ok)
        {
            return p;
        }
    }
    panic!("no representation in general position found");
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn random_root_of_unity(rng: &mut TestRng) -> Scalar {
    Scalar::root_of_unity(rng.gen_range(0..12), 12)
}

/// A root `α` with `α^r = target`, chosen among the `r` candidates.
fn random_rth_root(rng: &mut TestRng, target: Scalar, r: u32) -> Scalar {
    let r = i64::from(r);
    let j = rng.gen_range(0..r);
    Scalar::new(
        (target.zeta() + Rational::from_integer(j)) / r,
        Rational::from_integer(0),
    )
}

/// A registry satisfying every invariant: a mix of self-dual cuspidals
/// (with random admissible Shalika sets) and dual pairs.
pub fn random_registry(rng: &mut TestRng) -> Registry {
    let mut data = Vec::new();
    let count = rng.gen_range(1..=5);
    for i in 0..count {
        let r = rng.gen_range(1..=4u32);
        let f = *divisors(r).choose(rng).expect("1 divides r");
        if rng.gen_bool(0.5) {
            let label = format!("c{i}");
            let omega = random_root_of_unity(rng);
            let alpha0 = random_rth_root(rng, omega * omega, r);
            let shalika = if r % 2 == 0 {
                Scalar::roots_of_unity(f)
                    .into_iter()
                    .map(|z| alpha0 * z)
                    .filter(|a| a.pow(i64::from(r / 2)) == omega)
                    .filter(|_| rng.gen_bool(0.7))
                    .collect()
            } else {
                Vec::new()
            };
            data.push(CuspidalDatum {
                label: label.clone(),
                r,
                f,
                omega,
                dual: Some(DualData { label, alpha0 }),
                shalika,
            });
        } else {
            let (a, b) = (format!("c{i}"), format!("c{i}_dual"));
            let (wa, wb) = (random_root_of_unity(rng), random_root_of_unity(rng));
            let alpha0 = random_rth_root(rng, wa * wb, r);
            let back = alpha0 * *Scalar::roots_of_unity(f).choose(rng).expect("f >= 1");
            data.push(CuspidalDatum {
                label: a.clone(),
                r,
                f,
                omega: wa,
                dual: Some(DualData {
                    label: b.clone(),
                    alpha0,
                }),
                shalika: Vec::new(),
            });
            data.push(CuspidalDatum {
                label: b,
                r,
                f,
                omega: wb,
                dual: Some(DualData {
                    label: a,
                    alpha0: back,
                }),
                shalika: Vec::new(),
            });
        }
    }
    let reg = Registry::from_cuspidals(data).expect("labels are distinct");
    reg.validate()
        .expect("generator respects the registry invariants");
    reg
}

/// Outcome of one property over its generated inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Check {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: crate::Result<bool>, what: impl FnOnce() -> String) {
        self.cases += 1;
        match ok {
            Ok(true) => {}
            Ok(false) => self.failures.push(what()),
            Err(e) => self.failures.push(format!("{}: {e}", what())),
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
        }
    }
}

/// Runs the library's identities on generated inputs over `reg`.
pub fn run_suite(reg: &Registry, seed: u64, cases: usize) -> Vec<SuiteResult> {
    let mut rng = rng(seed);
    let mut out = Vec::new();

    let mut c = Check::new("rs = ext * sym");
    for _ in 0..cases {
        let p = random_representation(&mut rng, reg, 4, 10);
        let ok = (|| Ok(l_rep_rs(reg, &p)? == l_rep_ext(reg, &p)?.mul(&l_rep_sym(reg, &p)?)))();
        c.record(ok, || p.to_string());
    }
    out.push(c.finish());

    let mut c = Check::new("ext(Δ) divides rs(Δ, Δ)");
    let mut s = Check::new("shift equivariance");
    for _ in 0..cases {
        let Some(d) = random_segment(&mut rng, reg, 10, 6) else {
            break;
        };
        c.record(
            (|| Ok(l_seg_rs(reg, &d, &d)?.contains(&l_seg_ext(reg, &d)?)))(),
            || d.to_string(),
        );
        let s0 = Rational::new(rng.gen_range(-6..=6), 2);
        s.record(
            (|| {
                let twisted = d.twist(Scalar::q_pow(s0));
                Ok(l_seg_ext(reg, &twisted)? == l_seg_ext(reg, &d)?.shift(Scalar::q_pow(s0 * 2)))
            })(),
            || format!("{d} by {s0}"),
        );
    }
    out.push(c.finish());
    out.push(s.finish());

    let mut c = Check::new("derivative oracle");
    for _ in 0..cases.min(50) {
        let p = random_general_position(&mut rng, reg, 3, 8);
        c.record(
            (|| Ok(l_ext_via_derivatives(reg, &p)? == l_rep_ext(reg, &p)?))(),
            || p.to_string(),
        );
    }
    out.push(c.finish());

    let mut c = Check::new("gamma multiplicativity");
    let all_dual = reg.cuspidals().all(|d| d.dual.is_some());
    for _ in 0..if all_dual { cases } else { 0 } {
        let p = random_representation(&mut rng, reg, 4, 10);
        c.record(
            (|| Ok(gamma_ext(reg, &p)? == gamma_ext_by_parts(reg, &p)?))(),
            || p.to_string(),
        );
    }
    out.push(c.finish());

    let mut c = Check::new("langlands agreement");
    for _ in 0..cases {
        let p = random_representation(&mut rng, reg, 4, 10);
        let mut phi = FormalParam::from(p);
        let mut order: Vec<usize> = (0..phi.summands().len()).collect();
        order.shuffle(&mut rng);
        phi = phi.permuted(&order);
        c.record(langlands_agree(reg, &phi), || phi.to_string());
    }
    out.push(c.finish());

    let mut c = Check::new("dsl round trip");
    for _ in 0..cases {
        let p = random_representation(&mut rng, reg, 4, 10);
        c.record(Ok(parse_repr(&render(&p)).as_ref() == Ok(&p)), || {
            p.to_string()
        });
    }
    out.push(c.finish());

    let mut c = Check::new("unramified product formula");
    if reg.contains("one") {
        for _ in 0..cases {
            let m = rng.gen_range(1..=6);
            let a = random_satake(&mut rng, m);
            let mut expected = Vec::new();
            for i in 0..m {
                for j in i + 1..m {
                    expected.push(a[i] * a[j]);
                }
            }
            c.record(
                (|| {
                    let p = Representation::unramified(reg, "one", &a)?;
                    Ok(l_rep_ext(reg, &p)? == EulerFactor::from_roots(expected))
                })(),
                || format!("{a:?}"),
            );
        }
    }
    out.push(c.finish());

    out
}
