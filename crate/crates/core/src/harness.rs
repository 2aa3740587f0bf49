//! Exhaustive enumeration of normalized sets and the census/verification
//! campaigns over them.
//!
//! Work is partitioned per span across a bounded worker pool; partial
//! counters form a commutative monoid merged by addition, and violation
//! lists are sorted at the end, so reports are byte-identical regardless of
//! the job count.

use crate::classify::{
    check_bardaji_grynkiewicz, check_theorem, classify_normalized, FormWitness, TheoremId,
};
use crate::error::{Error, Result};
use crate::intset::{DoublingProfile, IntSet, NormalizedSet, Regime};
use crate::parse::format_set;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::PathBuf;

/// Largest span the u64 interior-mask enumeration supports.
pub const MAX_ENUMERABLE_SPAN: i64 = 63;

/// The subsets of [0, n] containing 0 and n with gcd 1, each exactly once,
/// in lexicographic bit order of the interior mask.
pub fn enumerate_normalized(n: i64) -> Result<impl Iterator<Item = NormalizedSet>> {
    if !(1..=MAX_ENUMERABLE_SPAN).contains(&n) {
        return Err(Error::SpanRange {
            min: 1,
            max: MAX_ENUMERABLE_SPAN,
            got: n,
        });
    }
    Ok((0u64..1 << (n - 1)).filter_map(move |mask| normalized_from_mask(n, mask)))
}

/// Decodes one interior mask (bit i ↔ element i+1); None when the gcd
/// filter rejects the set.
pub(crate) fn normalized_from_mask(n: i64, mask: u64) -> Option<NormalizedSet> {
    let mut g = n;
    let mut elems = Vec::with_capacity(mask.count_ones() as usize + 2);
    elems.push(0);
    for i in 0..n - 1 {
        if mask >> i & 1 != 0 {
            let e = i + 1;
            g = num_integer::gcd(g, e);
            elems.push(e);
        }
    }
    elems.push(n);
    (g == 1).then(|| NormalizedSet::from_parts_unchecked(IntSet::from_sorted(elems), n))
}

#[derive(Clone, Debug)]
pub struct HarnessConfig {
    pub max_span: i64,
    pub theorems: Vec<TheoremId>,
    pub job_count: usize,
    pub output_path: Option<PathBuf>,
}

impl HarnessConfig {
    pub fn new(max_span: i64) -> Self {
        HarnessConfig {
            max_span,
            theorems: TheoremId::ALL.to_vec(),
            job_count: std::thread::available_parallelism().map_or(1, |n| n.get()),
            output_path: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(2..=MAX_ENUMERABLE_SPAN).contains(&self.max_span) {
            return Err(Error::SpanRange {
                min: 2,
                max: MAX_ENUMERABLE_SPAN,
                got: self.max_span,
            });
        }
        if self.job_count == 0 {
            return Err(Error::Parse("job_count must be positive".into()));
        }
        Ok(())
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.job_count)
            .build()
            .map_err(|e| Error::Parse(format!("worker pool: {e}")))
    }
}

/// One counterexample found by a campaign; expected never to occur.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub span: i64,
    pub set: Vec<i64>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SpanRow {
    pub span: i64,
    pub total: u64,
    pub sub_critical: u64,
    pub critical: u64,
    pub super_critical: u64,
    /// Case counts among critical sets (cases overlap, so these exceed
    /// `critical` in general).
    pub case_bi_ap: u64,
    pub case_long_interval: u64,
    pub case_k6: u64,
    pub case_forms: u64,
    pub forms_t: u64,
    pub forms_t_reflected: u64,
    pub forms_s: u64,
    /// Count per exact case combination, keyed like "1+4".
    pub case_combinations: BTreeMap<String, u64>,
    /// Critical sets dense enough for the hole identity h1+h2+2h3 = |A|−2.
    pub hole_identity_checked: u64,
    /// Critical dense sets, neither bi-AP nor K6, checked against the
    /// stability-frontier interval bound.
    pub frontier_checked: u64,
}

impl SpanRow {
    fn merge(mut self, other: SpanRow) -> SpanRow {
        self.total += other.total;
        self.sub_critical += other.sub_critical;
        self.critical += other.critical;
        self.super_critical += other.super_critical;
        self.case_bi_ap += other.case_bi_ap;
        self.case_long_interval += other.case_long_interval;
        self.case_k6 += other.case_k6;
        self.case_forms += other.case_forms;
        self.forms_t += other.forms_t;
        self.forms_t_reflected += other.forms_t_reflected;
        self.forms_s += other.forms_s;
        for (k, v) in other.case_combinations {
            *self.case_combinations.entry(k).or_insert(0) += v;
        }
        self.hole_identity_checked += other.hole_identity_checked;
        self.frontier_checked += other.frontier_checked;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub max_span: i64,
    pub rows: Vec<SpanRow>,
    pub violations: Vec<Violation>,
}

impl CensusReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Default)]
struct SpanAccum {
    row: SpanRow,
    violations: Vec<Violation>,
}

impl SpanAccum {
    fn merge(mut self, other: SpanAccum) -> SpanAccum {
        self.row = self.row.merge(other.row);
        self.violations.extend(other.violations);
        self
    }
}

fn census_one(a: &NormalizedSet, acc: &mut SpanAccum) {
    let n = a.span();
    let two_a_bits = a.sumset_bits();
    let size = a.len();
    let profile = DoublingProfile::from_sizes(size, two_a_bits.count_ones());
    acc.row.total += 1;
    match profile.regime {
        Regime::SubCritical => acc.row.sub_critical += 1,
        Regime::Critical => acc.row.critical += 1,
        Regime::SuperCritical => acc.row.super_critical += 1,
    }
    if profile.regime != Regime::Critical {
        return;
    }

    let report = classify_normalized(a);
    let violation = |detail: String| Violation {
        span: n,
        set: a.set().iter().collect(),
        detail,
    };
    if !report.any_case() {
        acc.violations
            .push(violation("critical set matches no case".into()));
    } else if !report.verify(a) {
        acc.violations
            .push(violation("certificate failed re-verification".into()));
    }

    let ids = report.case_ids();
    if report.bi_ap.is_some() {
        acc.row.case_bi_ap += 1;
    }
    if report.long_interval.is_some() {
        acc.row.case_long_interval += 1;
    }
    if report.k6.is_some() {
        acc.row.case_k6 += 1;
    }
    if !report.forms.is_empty() {
        acc.row.case_forms += 1;
    }
    if report.forms.iter().any(|f| matches!(f, FormWitness::T(_))) {
        acc.row.forms_t += 1;
    }
    if report
        .forms
        .iter()
        .any(|f| matches!(f, FormWitness::TReflected(_)))
    {
        acc.row.forms_t_reflected += 1;
    }
    if report.forms.iter().any(|f| matches!(f, FormWitness::S(_))) {
        acc.row.forms_s += 1;
    }
    let key = ids
        .iter()
        .map(u8::to_string)
        .collect::<Vec<_>>()
        .join("+");
    *acc.row.case_combinations.entry(key).or_insert(0) += 1;

    // hole identity under the density hypothesis |A| > n/2 + 1
    if 2 * size as i64 > n + 2 {
        acc.row.hole_identity_checked += 1;
        let t = a.hole_taxonomy().expect("density hypothesis checked");
        if t.h1() + t.h2() + 2 * t.h3() != size - 2 {
            acc.violations.push(violation(format!(
                "hole identity failed: h1={} h2={} h3={} |A|={}",
                t.h1(),
                t.h2(),
                t.h3(),
                size
            )));
        }

        // frontier bound, guarded exactly as stated: not bi-AP, not K6
        if report.bi_ap.is_none() && report.k6.is_none() {
            acc.row.frontier_checked += 1;
            let f = a.stability_frontiers();
            let len = 2 * n - f.right - f.left - 1;
            let covered = (f.left + 1..=2 * n - f.right - 1)
                .all(|x| two_a_bits.get(x as usize));
            if !(f.left < n - f.right && covered && len >= 2 * size as i64 - 1) {
                acc.violations.push(violation(format!(
                    "frontier bound failed: l'={} r'={}",
                    f.left, f.right
                )));
            }
        }
    }
}

/// Aggregates the classifier over every normalized set with span ≤ max_span.
/// The report is deterministic and independent of `job_count`.
pub fn run_census(config: &HarnessConfig) -> Result<CensusReport> {
    config.validate()?;
    let pool = config.pool()?;
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for n in 1..=config.max_span {
        let mut acc = pool.install(|| {
            (0u64..1 << (n - 1))
                .into_par_iter()
                .fold(SpanAccum::default, |mut acc, mask| {
                    if let Some(a) = normalized_from_mask(n, mask) {
                        census_one(&a, &mut acc);
                    }
                    acc
                })
                .reduce(SpanAccum::default, SpanAccum::merge)
        });
        acc.row.span = n;
        acc.violations.sort();
        rows.push(acc.row);
        violations.extend(acc.violations);
    }
    let report = CensusReport {
        max_span: config.max_span,
        rows,
        violations,
    };
    if let Some(path) = &config.output_path {
        std::fs::write(path, report.to_json_string() + "\n").map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    Ok(report)
}

/// A theorem whose hypotheses were met but whose conclusion failed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct VerificationFailure {
    pub theorem: String,
    pub set: Vec<i64>,
    pub set_b: Option<Vec<i64>>,
    pub detail: String,
}

/// Largest span used for the two-set theorem's pair enumeration.
const BG_SPAN_CAP: i64 = 12;
/// Largest set size used for the two-set theorem's pair enumeration.
const BG_SIZE_CAP: usize = 6;

/// All translation-normalized sets with the given span and at most
/// `BG_SIZE_CAP` elements (no gcd filter; the theorem is stated for raw sets).
fn bg_universe(span: i64) -> Vec<IntSet> {
    if span == 0 {
        return vec![IntSet::new([0])];
    }
    let mut out = Vec::new();
    for mask in 0u64..1 << (span - 1) {
        if mask.count_ones() as usize + 2 > BG_SIZE_CAP {
            continue;
        }
        let mut elems = vec![0];
        for i in 0..span - 1 {
            if mask >> i & 1 != 0 {
                elems.push(i + 1);
            }
        }
        elems.push(span);
        out.push(IntSet::from_sorted(elems));
    }
    out
}

/// Runs the selected theorem checkers exhaustively and returns every failure
/// (empty on success). Campaigns never abort early.
pub fn run_verification(config: &HarnessConfig) -> Result<Vec<VerificationFailure>> {
    config.validate()?;
    let pool = config.pool()?;
    let mut theorems = config.theorems.clone();
    theorems.sort();
    theorems.dedup();

    let mut failures = Vec::new();
    for id in theorems {
        match id {
            TheoremId::BardajiGrynkiewicz => {
                let cap = config.max_span.min(BG_SPAN_CAP);
                let universe: Vec<IntSet> = (0..=cap).flat_map(bg_universe).collect();
                let mut fs = pool.install(|| {
                    universe
                        .par_iter()
                        .flat_map_iter(|a| {
                            universe.iter().filter_map(|b| {
                                let v = check_bardaji_grynkiewicz(a, b, false)
                                    .expect("nonempty operands");
                                v.failed().then(|| VerificationFailure {
                                    theorem: id.as_str().to_string(),
                                    set: a.iter().collect(),
                                    set_b: Some(b.iter().collect()),
                                    detail: v.witness.unwrap_or_default(),
                                })
                            })
                        })
                        .collect::<Vec<_>>()
                });
                fs.sort();
                failures.extend(fs);
            }
            _ => {
                for n in 1..=config.max_span {
                    let mut fs = pool.install(|| {
                        (0u64..1 << (n - 1))
                            .into_par_iter()
                            .filter_map(|mask| {
                                let a = normalized_from_mask(n, mask)?;
                                let v = check_theorem(id, a.set(), None).expect("valid input");
                                v.failed().then(|| VerificationFailure {
                                    theorem: id.as_str().to_string(),
                                    set: a.set().iter().collect(),
                                    set_b: None,
                                    detail: v.witness.unwrap_or_default(),
                                })
                            })
                            .collect::<Vec<_>>()
                    });
                    fs.sort();
                    failures.extend(fs);
                }
            }
        }
    }
    Ok(failures)
}

/// Formats one normalized set per line, the same literal syntax the CLI reads.
pub fn format_enumeration(sets: impl Iterator<Item = NormalizedSet>) -> String {
    let mut out = String::new();
    for a in sets {
        out.push_str(&format_set(a.set()));
        out.push('\n');
    }
    out
}
