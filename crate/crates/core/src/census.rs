//! Weighted-box enumeration, field deduplication, growth fitting, and
//! the certified-fraction density scan.
//!
//! A box at edge Y contains the integer parameter tuples with
//! |α_i| ≤ ⌊Y^i⌋, |α| ≤ ⌊Y⌋ and |τ| ≤ ⌊Y^{n/2}⌋ (even n) or
//! |τ| ≤ ⌊Y^{(n−1)/2}⌋ (odd n). Every tuple is built into its monic
//! integral polynomial, certified, and the certified ones deduplicated
//! by a field fingerprint: degree, squarefree kernel of the
//! discriminant, and the splitting patterns at a shared run of good
//! primes. Equal fields give equal fingerprints; distinct fields can
//! collide only by coincidence across all recorded primes.
//!
//! All bulk runs chunk the index space and merge per-chunk aggregates
//! commutatively, so reports do not depend on the worker count.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{factorial, floor_pow, primes_below, primes_from, squarefree_kernel};
use crate::construct::{
    build, disc_bound, free_alpha_count, height_constant, ConstructError, ConstructionRecord,
    Parity, Specialization,
};
use crate::exponents::an_count_exponent;
use crate::galois::{certify_an_with_disc, factor_degrees_mod_p, CycleType, Verdict};
use crate::poly::height_at_most;
use crate::resultant::{discriminant, discriminant_int};
use crate::{BigRat, IntPoly};

#[derive(Debug, Clone, Error, PartialEq)]
pub enum CensusError {
    #[error("box too large: estimated {estimated} tuples exceeds cap {cap}")]
    BoxTooLarge { estimated: u128, cap: u128 },
    #[error("discriminant vanishes")]
    DegenerateDiscriminant,
    #[error("box edge must be a finite number >= 1, got {0}")]
    EdgeTooSmall(f64),
    #[error("thresholds must strictly increase: entry {at} breaks the order")]
    UnorderedThresholds { at: usize },
    #[error("need at least 2 reports with nonzero field counts to fit a slope")]
    NoFit,
    #[error("reports must share one degree and strictly increase in Y")]
    MixedReports,
    #[error(transparent)]
    UnsupportedDegree(#[from] ConstructError),
    #[error("internal invariant violated at {spec}: {detail}")]
    Internal {
        spec: Box<Specialization>,
        detail: String,
    },
}

fn internal(spec: &Specialization, detail: impl Into<String>) -> CensusError {
    CensusError::Internal {
        spec: Box::new(spec.clone()),
        detail: detail.into(),
    }
}

mod big_str {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }
}

mod rat_str {
    use num_rational::BigRational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }
}

/// A parameter box: degree, edge, and whether the degenerate τ = 0
/// slice is skipped.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoxSpec {
    pub n: usize,
    pub parity: Parity,
    pub y: f64,
    pub exclude_degenerate: bool,
    #[serde(skip)]
    bounds: Vec<i64>,
    #[serde(skip)]
    sizes: Vec<u128>,
}

impl BoxSpec {
    pub fn new(n: usize, y: f64, exclude_degenerate: bool) -> Result<BoxSpec, CensusError> {
        free_alpha_count(n)?;
        if !y.is_finite() || y < 1.0 {
            return Err(CensusError::EdgeTooSmall(y));
        }
        let exps = edge_exponents(n);
        let bounds: Vec<i64> = exps.iter().map(|&e| floor_pow(y, e)).collect();
        let tau_axis = bounds.len() - 1;
        let sizes: Vec<u128> = bounds
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                let full = 2 * b as u128 + 1;
                if exclude_degenerate && i == tau_axis {
                    full - 1
                } else {
                    full
                }
            })
            .collect();
        Ok(BoxSpec {
            n,
            parity: Parity::of(n),
            y,
            exclude_degenerate,
            bounds,
            sizes,
        })
    }

    /// Per-axis absolute bounds, τ axis last.
    pub fn bounds(&self) -> &[i64] {
        &self.bounds
    }

    pub fn tuple_count(&self) -> u128 {
        self.sizes
            .iter()
            .try_fold(1u128, |acc, &s| acc.checked_mul(s))
            .unwrap_or(u128::MAX)
    }

    /// Tuple at a lexicographic index; α_1 is the most significant axis
    /// and τ the fastest-varying one.
    pub fn decode(&self, mut idx: u128) -> Specialization {
        let axes = self.sizes.len();
        let mut digits = vec![0u128; axes];
        for i in (0..axes).rev() {
            digits[i] = idx % self.sizes[i];
            idx /= self.sizes[i];
        }
        debug_assert_eq!(idx, 0, "index beyond the box");
        let value = |axis: usize| -> i64 {
            let b = self.bounds[axis];
            let d = digits[axis] as i64;
            if self.exclude_degenerate && axis == axes - 1 {
                // τ axis with 0 removed: the upper half shifts by one
                if d < b {
                    d - b
                } else {
                    d - b + 1
                }
            } else {
                d - b
            }
        };
        let alphas: Vec<i64> = (0..axes - 2).map(&value).collect();
        let alpha = value(axes - 2);
        let tau = value(axes - 1);
        Specialization::new(self.n, alphas, alpha, tau).expect("box axes match the family arity")
    }

    pub fn iter(&self) -> impl Iterator<Item = Specialization> + '_ {
        (0..self.tuple_count()).map(move |i| self.decode(i))
    }
}

/// Edge exponents per axis: |α_i| ≤ Y^i, |α| ≤ Y, and the τ exponent
/// from the offset degree (n/2 even, (n−1)/2 odd).
pub fn edge_exponents(n: usize) -> Vec<u32> {
    let free = free_alpha_count(n).expect("validated by caller");
    let mut exps: Vec<u32> = (1..=free as u32).collect();
    exps.push(1);
    exps.push(if n % 2 == 0 { n as u32 / 2 } else { (n as u32 - 1) / 2 });
    exps
}

/// All tuples in the box, lexicographically.
pub fn enumerate_box(b: &BoxSpec) -> impl Iterator<Item = Specialization> + '_ {
    b.iter()
}

fn trial_primes() -> &'static [u64] {
    static TP: OnceLock<Vec<u64>> = OnceLock::new();
    TP.get_or_init(|| primes_below(10_000))
}

/// Proxy identity of the field cut out by f: degree, squarefree kernel
/// of Disc(f), and the factorization patterns at the first k good
/// primes drawn from `prime_base` (extended past its end with the next
/// primes when f is bad at too many). Equal fields with equal good
/// primes produce equal fingerprints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FieldFingerprint {
    pub degree: usize,
    #[serde(with = "big_str")]
    pub disc_kernel: BigInt,
    pub splitting: Vec<(u64, CycleType)>,
}

fn splitting_vector(f: &IntPoly, k: usize, prime_base: &[u64]) -> Vec<(u64, CycleType)> {
    let n = f.degree().unwrap_or(0) as u64;
    let next = prime_base.last().map(|&p| p + 1).unwrap_or(n + 1);
    let mut out = Vec::with_capacity(k);
    for p in prime_base.iter().copied().chain(primes_from(next)) {
        if out.len() == k {
            break;
        }
        if let Ok(ty) = factor_degrees_mod_p(f, p) {
            out.push((p, ty));
        }
    }
    out
}

/// The shared prime list for a run: the first `len` primes above n.
pub fn default_prime_base(n: usize, len: usize) -> Vec<u64> {
    primes_from(n as u64 + 1).take(len).collect()
}

pub fn fingerprint(
    f: &IntPoly,
    k: usize,
    prime_base: &[u64],
) -> Result<FieldFingerprint, CensusError> {
    let degree = f.degree().ok_or(CensusError::DegenerateDiscriminant)?;
    let disc = discriminant_int(f).map_err(|_| CensusError::DegenerateDiscriminant)?;
    if disc.is_zero() {
        return Err(CensusError::DegenerateDiscriminant);
    }
    Ok(FieldFingerprint {
        degree,
        disc_kernel: squarefree_kernel(&disc, trial_primes()),
        splitting: splitting_vector(f, k, prime_base),
    })
}

/// Census result for one box.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountReport {
    #[serde(rename = "box")]
    pub box_spec: BoxSpec,
    pub specializations: u64,
    /// Tuples whose Disc(f_γ) = 0 despite τ ≠ 0; counted above,
    /// excluded from everything below.
    pub disc_zero_excluded: u64,
    pub certified_an: u64,
    pub distinct_fingerprints: u64,
    #[serde(with = "big_str")]
    pub max_abs_disc: BigInt,
    /// How many fingerprints occur with each multiplicity.
    pub multiplicity_histogram: BTreeMap<u64, u64>,
    /// Wall-clock seconds; deliberately not serialized so that report
    /// files are byte-identical across reruns and worker counts.
    #[serde(skip)]
    pub runtime_seconds: f64,
}

/// All integer partitions of n as cycle types (used to intern types to
/// small ids during deduplication).
fn partitions(n: usize) -> Vec<CycleType> {
    fn gen(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            gen(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    gen(n, n, &mut Vec::new(), &mut raw);
    let mut types: Vec<CycleType> = raw.into_iter().map(CycleType::new).collect();
    types.sort();
    types
}

struct TypeTable {
    types: Vec<CycleType>,
}

impl TypeTable {
    fn new(n: usize) -> TypeTable {
        TypeTable {
            types: partitions(n),
        }
    }

    fn id(&self, ty: &CycleType) -> u16 {
        self.types
            .binary_search(ty)
            .expect("every factor pattern is a partition of n") as u16
    }
}

/// Compact dedup key: kernel plus interned splitting pattern. The
/// degree is constant within a run.
#[derive(PartialEq, Eq, Hash)]
struct FpKey {
    kernel: BigInt,
    split: Vec<(u32, u16)>,
}

struct Partial {
    specializations: u64,
    disc_zero: u64,
    certified: u64,
    max_abs_disc: BigInt,
    fps: HashMap<FpKey, u64>,
}

impl Partial {
    fn new() -> Partial {
        Partial {
            specializations: 0,
            disc_zero: 0,
            certified: 0,
            max_abs_disc: BigInt::zero(),
            fps: HashMap::new(),
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.specializations += other.specializations;
        self.disc_zero += other.disc_zero;
        self.certified += other.certified;
        if other.max_abs_disc > self.max_abs_disc {
            self.max_abs_disc = other.max_abs_disc;
        }
        for (k, v) in other.fps {
            *self.fps.entry(k).or_insert(0) += v;
        }
        self
    }
}

struct RunCtx {
    /// (n!)^{n(n−1)}: the exact factor between Disc(f̃_γ) and Disc(f_γ).
    disc_scale: BigRat,
    height_bound: BigRat,
    disc_limit: BigRat,
}

impl RunCtx {
    fn new(n: usize, y: f64) -> RunCtx {
        let y_rat = BigRational::from_float(y).expect("finite edge");
        let scale = num_traits::pow(factorial(n), n * (n - 1));
        RunCtx {
            disc_scale: BigRational::from_integer(scale),
            height_bound: BigRational::from_integer(BigInt::from(height_constant(n))) * &y_rat,
            disc_limit: disc_bound(n, &y_rat),
        }
    }
}

struct Evaluated {
    rec: ConstructionRecord,
    disc_tilde: BigRat,
    /// Disc(f_γ); None exactly when it vanishes.
    disc: Option<BigInt>,
}

fn evaluate(ctx: &RunCtx, spec: &Specialization) -> Result<Evaluated, CensusError> {
    let rec = build(spec).map_err(|e| internal(spec, e.to_string()))?;
    let disc_tilde =
        discriminant(&rec.f_tilde_gamma).map_err(|e| internal(spec, e.to_string()))?;
    let disc = if disc_tilde.is_zero() {
        None
    } else {
        let d = &ctx.disc_scale * &disc_tilde;
        if !d.is_integer() {
            return Err(internal(spec, "scaled discriminant is not integral"));
        }
        Some(d.to_integer())
    };
    Ok(Evaluated {
        rec,
        disc_tilde,
        disc,
    })
}

fn check_in_run_bounds(ctx: &RunCtx, ev: &Evaluated, spec: &Specialization) -> Result<(), CensusError> {
    let ok = height_at_most(&ev.rec.f_tilde_gamma, &ctx.height_bound)
        .map_err(|e| internal(spec, e.to_string()))?;
    if !ok {
        return Err(internal(spec, "height bound exceeded"));
    }
    if let Some(d) = &ev.disc {
        if BigRational::from_integer(d.abs()) > ctx.disc_limit {
            return Err(internal(spec, "discriminant bound exceeded"));
        }
    }
    Ok(())
}

/// Extends a certificate's witness prefix to exactly k splitting
/// entries, continuing along the same ascending prime stream.
fn extend_splitting(
    f: &IntPoly,
    have: &[(u64, CycleType)],
    k: usize,
) -> Vec<(u64, CycleType)> {
    if have.len() >= k {
        return have[..k].to_vec();
    }
    let mut out = have.to_vec();
    let n = f.degree().unwrap_or(0) as u64;
    let next = have.last().map(|(p, _)| p + 1).unwrap_or(n + 1);
    for p in primes_from(next) {
        if out.len() == k {
            break;
        }
        if let Ok(ty) = factor_degrees_mod_p(f, p) {
            out.push((p, ty));
        }
    }
    out
}

const CHUNK: u128 = 2048;

fn chunk_ranges(total: u128) -> Vec<(u128, u128)> {
    let mut v = Vec::new();
    let mut lo = 0u128;
    while lo < total {
        let hi = (lo + CHUNK).min(total);
        v.push((lo, hi));
        lo = hi;
    }
    v
}

/// Full census of one box: enumerate, build, certify, fingerprint,
/// deduplicate. Refuses boxes whose tuple count exceeds `cap`.
pub fn count_fields(
    bx: &BoxSpec,
    budget: usize,
    k: usize,
    cap: u128,
) -> Result<CountReport, CensusError> {
    let start = Instant::now();
    let total = bx.tuple_count();
    if total > cap {
        return Err(CensusError::BoxTooLarge {
            estimated: total,
            cap,
        });
    }
    let ctx = RunCtx::new(bx.n, bx.y);
    let table = TypeTable::new(bx.n);
    let merged = chunk_ranges(total)
        .into_par_iter()
        .map(|(lo, hi)| -> Result<Partial, CensusError> {
            let mut part = Partial::new();
            for idx in lo..hi {
                let spec = bx.decode(idx);
                part.specializations += 1;
                let ev = evaluate(&ctx, &spec)?;
                check_in_run_bounds(&ctx, &ev, &spec)?;
                let Some(d) = &ev.disc else {
                    part.disc_zero += 1;
                    continue;
                };
                let abs = d.abs();
                if abs > part.max_abs_disc {
                    part.max_abs_disc = abs;
                }
                let cert = certify_an_with_disc(&ev.rec.f_gamma, d, budget)
                    .map_err(|e| internal(&spec, e.to_string()))?;
                if cert.verdict != Verdict::CertifiedAn {
                    continue;
                }
                part.certified += 1;
                // kernel of Disc(f_γ) via the small numbers: the scale factor
                // is a perfect square over trial primes, so the kernel of
                // numerator times denominator of Disc(f̃_γ) is the same
                let kernel = squarefree_kernel(
                    &(ev.disc_tilde.numer() * ev.disc_tilde.denom()),
                    trial_primes(),
                );
                let split = extend_splitting(&ev.rec.f_gamma, &cert.witnesses, k);
                let key = FpKey {
                    kernel,
                    split: split
                        .iter()
                        .map(|(p, ty)| (*p as u32, table.id(ty)))
                        .collect(),
                };
                *part.fps.entry(key).or_insert(0) += 1;
            }
            Ok(part)
        })
        .try_reduce(Partial::new, |a, b| Ok(a.merge(b)))?;
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    for &m in merged.fps.values() {
        *histogram.entry(m).or_insert(0) += 1;
    }
    Ok(CountReport {
        box_spec: bx.clone(),
        specializations: merged.specializations,
        disc_zero_excluded: merged.disc_zero,
        certified_an: merged.certified,
        distinct_fingerprints: merged.fps.len() as u64,
        max_abs_disc: merged.max_abs_disc,
        multiplicity_histogram: histogram,
        runtime_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Least-squares slope of log(distinct fields) against log X with
/// X = Y^{n(n−1)}, reported next to the exact target exponent.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthFit {
    pub slope: f64,
    #[serde(with = "rat_str")]
    pub target: BigRat,
    /// (log X, log count) pairs actually used.
    pub points: Vec<(f64, f64)>,
}

pub fn growth_fit(reports: &[CountReport]) -> Result<GrowthFit, CensusError> {
    if reports.len() < 2 {
        return Err(CensusError::NoFit);
    }
    let n = reports[0].box_spec.n;
    for w in reports.windows(2) {
        if w[1].box_spec.n != n || w[1].box_spec.y <= w[0].box_spec.y {
            return Err(CensusError::MixedReports);
        }
    }
    let points: Vec<(f64, f64)> = reports
        .iter()
        .filter(|r| r.distinct_fingerprints > 0)
        .map(|r| {
            let log_x = (n * (n - 1)) as f64 * r.box_spec.y.ln();
            (log_x, (r.distinct_fingerprints as f64).ln())
        })
        .collect();
    if points.len() < 2 {
        return Err(CensusError::NoFit);
    }
    let m = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / m;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.0 - mean_x)).sum();
    if sxx == 0.0 {
        return Err(CensusError::NoFit);
    }
    let target = an_count_exponent(n).map_err(|_| CensusError::MixedReports)?;
    Ok(GrowthFit {
        slope: sxy / sxx,
        target,
        points,
    })
}

/// One threshold of the density scan.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityPoint {
    pub t: f64,
    pub e_vector: Vec<u32>,
    pub sampled: u64,
    pub full_group: u64,
    #[serde(with = "rat_str")]
    pub estimate: BigRat,
    pub ci_low: f64,
    pub ci_high: f64,
}

/// Wilson 95% score interval for `successes` out of `trials`.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.96f64;
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

fn density_seed(seed: u64, index: usize) -> [u8; 32] {
    let mut s = [0u8; 32];
    s[..8].copy_from_slice(&seed.to_le_bytes());
    s[8..16].copy_from_slice(&(index as u64).to_le_bytes());
    s
}

/// Fraction of box points whose polynomial is certified full
/// alternating, at each threshold T. Boxes with at most `sample_cap`
/// points are enumerated exhaustively; larger ones are sampled
/// uniformly (`sample_cap` draws, seeded, portable).
pub fn density_scan(
    n: usize,
    t_list: &[f64],
    budget: usize,
    sample_cap: u64,
    seed: u64,
) -> Result<Vec<DensityPoint>, CensusError> {
    for (i, w) in t_list.windows(2).enumerate() {
        if w[1] <= w[0] {
            return Err(CensusError::UnorderedThresholds { at: i + 1 });
        }
    }
    let mut out = Vec::with_capacity(t_list.len());
    for (t_index, &t) in t_list.iter().enumerate() {
        let bx = BoxSpec::new(n, t, true)?;
        let ctx = RunCtx::new(n, t);
        let total = bx.tuple_count();
        let indices: Vec<u128> = if total <= sample_cap as u128 {
            (0..total).collect()
        } else {
            let mut rng = ChaCha12Rng::from_seed(density_seed(seed, t_index));
            (0..sample_cap).map(|_| rng.gen_range(0..total)).collect()
        };
        let sampled = indices.len() as u64;
        let full_group: u64 = indices
            .par_chunks(512)
            .map(|chunk| -> Result<u64, CensusError> {
                let mut hits = 0;
                for &idx in chunk {
                    let spec = bx.decode(idx);
                    let ev = evaluate(&ctx, &spec)?;
                    let Some(d) = &ev.disc else { continue };
                    let cert = certify_an_with_disc(&ev.rec.f_gamma, d, budget)
                        .map_err(|e| internal(&spec, e.to_string()))?;
                    if cert.verdict == Verdict::CertifiedAn {
                        hits += 1;
                    }
                }
                Ok(hits)
            })
            .try_reduce(|| 0, |a, b| Ok(a + b))?;
        let estimate = if sampled == 0 {
            BigRational::zero()
        } else {
            BigRational::new(BigInt::from(full_group), BigInt::from(sampled))
        };
        let (ci_low, ci_high) = wilson_interval(full_group, sampled);
        out.push(DensityPoint {
            t,
            e_vector: edge_exponents(n),
            sampled,
            full_group,
            estimate,
            ci_low,
            ci_high,
        });
    }
    Ok(out)
}

#[derive(Serialize)]
struct CensusDoc<'a> {
    schema: &'static str,
    reports: &'a [CountReport],
    #[serde(skip_serializing_if = "Option::is_none")]
    fit: Option<&'a GrowthFit>,
}

#[derive(Serialize)]
struct DensityDoc<'a> {
    schema: &'static str,
    density: &'a [DensityPoint],
}

pub fn census_json(reports: &[CountReport], fit: Option<&GrowthFit>) -> String {
    let doc = CensusDoc {
        schema: "census/1",
        reports,
        fit,
    };
    serde_json::to_string_pretty(&doc).expect("report serialization cannot fail")
}

pub fn density_json(points: &[DensityPoint]) -> String {
    let doc = DensityDoc {
        schema: "census/1",
        density: points,
    };
    serde_json::to_string_pretty(&doc).expect("report serialization cannot fail")
}

/// X = Y^{n(n−1)}, rendered exactly for integer edges.
fn x_column(n: usize, y: f64) -> String {
    let x = num_traits::pow(
        BigRational::from_float(y).expect("finite edge"),
        n * (n - 1),
    );
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{:e}", x.to_f64().unwrap_or(f64::NAN))
    }
}

pub fn census_csv(reports: &[CountReport]) -> String {
    let mut out =
        String::from("Y,X,specializations,certified_an,distinct_fingerprints,max_abs_disc\n");
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.box_spec.y,
            x_column(r.box_spec.n, r.box_spec.y),
            r.specializations,
            r.certified_an,
            r.distinct_fingerprints,
            r.max_abs_disc
        ));
    }
    out
}

pub fn density_csv(points: &[DensityPoint]) -> String {
    let mut out = String::from("T,sampled,full_group,estimate,ci_low,ci_high\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            p.t, p.sampled, p.full_group, p.estimate, p.ci_low, p.ci_high
        ));
    }
    out
}
