//! Batch verification over `n = 0, …, count−1`.
//!
//! Every per-index check is independent, so the batch is mapped over the
//! precomputed recurrence windows with [`Execution`]. Generating-function
//! expansion is sequential in `n`; the six series are expanded as one batch
//! each and compared against the per-index values.

use std::fmt;

use crate::genfunc::{builtin_gf, GfKind};
use crate::par::Execution;
use crate::recurrence::{
    self, check_eq4_state, f_closed, product_closed, product_from_state, FState, Product,
};
use crate::rings::GaussianInt;
use crate::solutions::{abc_closed, abcd_from_state, scale, RawSolution, Sign, SolutionRecord};

/// One named check run for every index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Closed form of `F_n` equals the recurrence value.
    FClosed,
    /// `F_{n+1}² − F_nF_{n+2} = 2^n(−1)^n`.
    Cassini,
    ProductSqNext,
    ProductCross,
    ProductSkip,
    /// Recurrence-built and closed-form `(A_n, B_n, C_n)` agree.
    AbcPaths,
    /// `A^5 + B^5 = C^5 + d^5`.
    FourTerm,
    /// `d_n = (−2)^n`.
    DCollapse,
    /// `2^n` divides every component.
    Divisibility,
    /// `a^5 + b^5 = c^5 + (−1)^n`.
    Quintic,
    /// `a` real and `c = −conj(b)`.
    FamilyShape,
    Gf(GfKind),
}

impl Check {
    pub fn all() -> Vec<Check> {
        let mut v = vec![
            Check::FClosed,
            Check::Cassini,
            Check::ProductSqNext,
            Check::ProductCross,
            Check::ProductSkip,
            Check::AbcPaths,
            Check::FourTerm,
            Check::DCollapse,
            Check::Divisibility,
            Check::Quintic,
            Check::FamilyShape,
        ];
        v.extend(GfKind::ALL.into_iter().map(Check::Gf));
        v
    }

    pub fn name(&self) -> String {
        match self {
            Check::FClosed => "f_rec=f_closed".into(),
            Check::Cassini => "cassini".into(),
            Check::ProductSqNext => "product_sq_next".into(),
            Check::ProductCross => "product_cross".into(),
            Check::ProductSkip => "product_skip".into(),
            Check::AbcPaths => "abc_paths".into(),
            Check::FourTerm => "four_term".into(),
            Check::DCollapse => "d_collapse".into(),
            Check::Divisibility => "divisibility".into(),
            Check::Quintic => "quintic".into(),
            Check::FamilyShape => "family_shape".into(),
            Check::Gf(k) => format!("gf_{}", k.name()),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Pass count of one check across the batch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tally {
    pub check: Check,
    pub passed: usize,
    pub total: usize,
    pub first_failure: Option<u32>,
}

impl Tally {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

/// `(n, a, b, c, sign)` with Gaussian parts as `(re, im)`.
pub type Example = (u32, i64, (i64, i64), (i64, i64), i32);

/// The first nontrivial members of the family.
pub const WORKED_EXAMPLES: [Example; 3] = [
    (1, 3, (-2, 3), (2, 3), -1),
    (2, 13, (-6, 11), (6, 11), 1),
    (3, 47, (-24, 41), (24, 41), -1),
];

/// The worked examples as records.
pub fn worked_examples() -> Vec<SolutionRecord> {
    WORKED_EXAMPLES
        .iter()
        .map(|&(n, a, b, c, sign)| SolutionRecord {
            n,
            a: GaussianInt::real(a),
            b: GaussianInt::new(b.0, b.1),
            c: GaussianInt::new(c.0, c.1),
            sign: Sign::from_i32(sign).expect("sign is ±1"),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleMatch {
    pub expected: SolutionRecord,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub count: u32,
    pub tallies: Vec<Tally>,
    /// Worked examples with `n < count`.
    pub examples: Vec<ExampleMatch>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.tallies.iter().all(Tally::all_passed) && self.examples.iter().all(|e| e.matches)
    }

    /// The lowest failing index and the first check failing there.
    pub fn first_failure(&self) -> Option<(Check, u32)> {
        self.tallies
            .iter()
            .filter_map(|t| t.first_failure.map(|n| (n, t.check)))
            .min()
            .map(|(n, c)| (c, n))
    }

    pub fn tally(&self, check: Check) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.check == check)
    }
}

struct IndexOutcome {
    checks: Vec<(Check, bool)>,
    record: Option<SolutionRecord>,
    raw: RawSolution,
}

fn check_index(s: &FState) -> IndexOutcome {
    let n = s.n;
    let mut checks = Vec::with_capacity(11);

    checks.push((Check::FClosed, f_closed(n).is_ok_and(|v| v == s.f_n)));
    checks.push((Check::Cassini, check_eq4_state(s)));
    for (check, which) in [
        (Check::ProductSqNext, Product::SqNext),
        (Check::ProductCross, Product::Cross),
        (Check::ProductSkip, Product::Skip),
    ] {
        let brute = product_from_state(s, which);
        checks.push((check, product_closed(n, which).is_ok_and(|v| v == brute)));
    }

    let raw = abcd_from_state(s);
    checks.push((
        Check::AbcPaths,
        abc_closed(n).is_ok_and(|c| raw.matches_closed(&c)),
    ));
    checks.push((Check::FourTerm, raw.satisfies_four_term_identity()));
    checks.push((Check::DCollapse, raw.d_collapses()));

    let record = scale(&raw).ok();
    checks.push((Check::Divisibility, record.is_some()));
    checks.push((
        Check::Quintic,
        record.as_ref().is_some_and(SolutionRecord::verify_quintic),
    ));
    checks.push((
        Check::FamilyShape,
        record
            .as_ref()
            .is_some_and(SolutionRecord::has_family_shape),
    ));

    IndexOutcome {
        checks,
        record,
        raw,
    }
}

fn gf_matches(kind: GfKind, count: usize, outcomes: &[IndexOutcome]) -> Vec<bool> {
    let coeffs = builtin_gf(kind).coefficients(count).unwrap_or_default();
    outcomes
        .iter()
        .enumerate()
        .map(|(n, o)| {
            let Some(coeff) = coeffs.get(n) else {
                return false;
            };
            let Ok(value) = crate::rings::AsInteger::as_integer(coeff) else {
                return false;
            };
            let expected = match (kind, &o.record) {
                (GfKind::ARaw, _) => Some(&o.raw.a),
                (GfKind::BRaw, _) => Some(&o.raw.b),
                (GfKind::CRaw, _) => Some(&o.raw.c),
                (GfKind::AScaled, Some(r)) => Some(&r.a),
                (GfKind::BScaled, Some(r)) => Some(&r.b),
                (GfKind::CScaled, Some(r)) => Some(&r.c),
                _ => None,
            };
            expected == Some(&value)
        })
        .collect()
}

/// Runs every check for `n < count` on the default backend.
pub fn run(count: u32) -> VerifyReport {
    run_with(count, Execution::default())
}

pub fn run_with(count: u32, exec: Execution) -> VerifyReport {
    let states: Vec<FState> = recurrence::states().take(count as usize).collect();
    let outcomes = exec.map(&states, check_index);
    let gf_results = exec.map(&GfKind::ALL, |&k| {
        (k, gf_matches(k, count as usize, &outcomes))
    });

    let mut tallies: Vec<Tally> = Check::all()
        .into_iter()
        .map(|check| Tally {
            check,
            passed: 0,
            total: 0,
            first_failure: None,
        })
        .collect();
    let mut record = |check: Check, n: u32, ok: bool| {
        let t = tallies
            .iter_mut()
            .find(|t| t.check == check)
            .expect("every check has a tally");
        t.total += 1;
        if ok {
            t.passed += 1;
        } else if t.first_failure.is_none() {
            t.first_failure = Some(n);
        }
    };
    for (n, o) in outcomes.iter().enumerate() {
        for &(check, ok) in &o.checks {
            record(check, n as u32, ok);
        }
    }
    for (kind, results) in &gf_results {
        for (n, &ok) in results.iter().enumerate() {
            record(Check::Gf(*kind), n as u32, ok);
        }
    }

    let examples = worked_examples()
        .into_iter()
        .filter(|e| e.n < count)
        .map(|expected| {
            let matches = outcomes[expected.n as usize].record.as_ref() == Some(&expected);
            ExampleMatch { expected, matches }
        })
        .collect();

    VerifyReport {
        count,
        tallies,
        examples,
    }
}

/// Scaled records for `n < count`, each paired with its quintic check.
pub fn generate(
    count: u32,
    exec: Execution,
) -> Vec<(u32, crate::error::Result<SolutionRecord>, bool)> {
    let states: Vec<FState> = recurrence::states().take(count as usize).collect();
    exec.map(&states, |s| {
        let rec = scale(&abcd_from_state(s));
        let ok = rec.as_ref().is_ok_and(SolutionRecord::verify_quintic);
        (s.n, rec, ok)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_batch_passes() {
        let report = run(4);
        assert!(report.all_passed(), "{report:?}");
        assert_eq!(report.examples.len(), 3);
        for t in &report.tallies {
            assert_eq!(t.total, 4, "{}", t.check);
        }
        assert_eq!(report.first_failure(), None);
    }

    #[test]
    fn single_index() {
        let report = run(1);
        assert!(report.all_passed());
        assert!(report.examples.is_empty());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        assert_eq!(
            run_with(30, Execution::Sequential),
            run_with(30, Execution::Parallel)
        );
    }

    #[test]
    fn worked_examples_verify() {
        for rec in worked_examples() {
            assert!(rec.verify_quintic(), "{rec}");
        }
    }

    #[test]
    fn generate_is_ordered() {
        let out = generate(20, Execution::Parallel);
        for (k, (n, rec, ok)) in out.iter().enumerate() {
            assert_eq!(*n as usize, k);
            assert!(ok);
            assert_eq!(rec.as_ref().unwrap().n, *n);
        }
    }
}
