//! Named verification suites. Each check counts passing and failing cases and
//! keeps the first counterexample.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use crate::characters::{
    char_fusion_v, char_fusion_v_one_line, char_fusion_v_two_line, char_fusion_w, char_v_general,
    char_v_rect, char_v_rect_two_line, char_w_general, char_w_rect, char_w_rect_translated,
    char_w_rect_two_line, inverse_kostka_expansion, WeightGradedCharacter,
};
use crate::error::{Error, Result};
use crate::kostka::{build_kostka_matrix, invert_unitriangular, kostka_index_set, kostka_poly, kostka_poly_rects, KostkaMatrix, RectangleMultiset};
use crate::oracles::{
    charge_kostka, cocharge_kostka, decompose_tensor, finite_char, lr_multiplicity, rectangle_factors,
    semistandard_tableaux, weyl_kac_char,
};
use crate::qseries::{LaurentPolynomial, TruncatedSeries};
use crate::weights::{
    partition_to_weight, partitions_of, weyl_dimension, PartitionShape, RankedWeight,
    RectangularSequence,
};

/// Tally for one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    pub first_failure: Option<String>,
    pub elapsed: Duration,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            passed: 0,
            failed: 0,
            first_failure: None,
            elapsed: Duration::ZERO,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    /// Counts an `Err` as a failed case.
    fn record_result(&mut self, r: Result<bool>, detail: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, detail),
            Err(e) => self.record(false, || format!("{}: {e}", detail())),
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} passed, {} failed",
            if self.ok() { "PASS" } else { "FAIL" },
            self.name,
            self.passed,
            self.failed
        )?;
        if f.alternate() {
            write!(f, " ({:.2?})", self.elapsed)?;
        }
        if let Some(first) = &self.first_failure {
            write!(f, "\n  first counterexample: {first}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    PaperTables,
    OracleLr,
    OracleCharge,
    OracleWeylKac,
    InternalIdentities,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::PaperTables,
        Suite::OracleLr,
        Suite::OracleCharge,
        Suite::OracleWeylKac,
        Suite::InternalIdentities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PaperTables => "paper-tables",
            Suite::OracleLr => "oracle-lr",
            Suite::OracleCharge => "oracle-charge",
            Suite::OracleWeylKac => "oracle-weyl-kac",
            Suite::InternalIdentities => "internal-identities",
        }
    }

    /// `all` expands to every suite.
    pub fn parse(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Self::ALL.to_vec());
        }
        Self::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .map(|x| vec![x])
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Sweep sizes; `None` selects each suite's default.
#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    pub max_size: Option<u64>,
    pub max_degree: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(CheckResult::ok)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite.name())?;
        for c in &self.checks {
            writeln!(f, "  {}", c.to_string().replace('\n', "\n  "))?;
        }
        Ok(())
    }
}

pub fn run_suite(suite: Suite, opts: VerifyOptions) -> SuiteReport {
    let checks = match suite {
        Suite::PaperTables => vec![
            check_sl4_matrix(),
            check_sl4_inverse(),
            check_sl3_closed_form(4),
            check_kostka_examples(),
            check_lr_examples(),
            check_character_examples(),
            check_six_term_expansion(),
            check_fusion_recombination(opts.max_degree.unwrap_or(3)),
        ],
        Suite::OracleLr => vec![check_lr_sweep(3, opts.max_size.unwrap_or(8))],
        Suite::OracleCharge => {
            let s = opts.max_size.unwrap_or(8);
            vec![
                check_charge_composite(s),
                check_fermionic_is_cocharge(s),
                check_charge_counts(s),
            ]
        }
        Suite::OracleWeylKac => {
            let d = opts.max_degree.unwrap_or(8);
            let sweep = weyl_kac_sweep();
            vec![
                check_weyl_kac_oracle_invariants(&sweep, d),
                check_weyl_kac_agreement(&sweep, d),
                check_positivity(&sweep, d, true),
                check_weyl_invariance_and_top(&sweep, d),
            ]
        }
        Suite::InternalIdentities => {
            let d = opts.max_degree.unwrap_or(6);
            vec![
                check_rectangular_collapse(2, 3, d),
                check_parametrizations(2, 3, d),
                check_translation_convergence(d),
            ]
        }
    };
    SuiteReport { suite, checks }
}

// Values as printed in the sl_4 example, rows then columns in index order.
const SL4_ORDER: &str = "(0,0,0);(1,0,1),(0,2,0);(2,1,0),(0,1,2);(4,0,0),(2,0,2),(1,2,1),(0,4,0),(0,0,4)";

const SL4_MATRIX: [[&str; 10]; 10] = [
    ["1", "q", "0", "0", "0", "0", "q^2", "0", "0", "0"],
    ["0", "1", "0", "q", "q", "0", "q", "q^2", "0", "0"],
    ["0", "0", "1", "0", "0", "0", "0", "q + q^2", "0", "0"],
    ["0", "0", "0", "1", "0", "0", "0", "q", "0", "0"],
    ["0", "0", "0", "0", "1", "0", "0", "q", "0", "0"],
    ["0", "0", "0", "0", "0", "1", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "1", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "1", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "1", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "1"],
];

const SL4_INVERSE: [[&str; 10]; 10] = [
    ["1", "-q", "0", "q^2", "q^2", "0", "0", "-q^3", "0", "0"],
    ["0", "1", "0", "-q", "-q", "0", "-q", "q^2", "0", "0"],
    ["0", "0", "1", "0", "0", "0", "0", "-q - q^2", "0", "0"],
    ["0", "0", "0", "1", "0", "0", "0", "-q", "0", "0"],
    ["0", "0", "0", "0", "1", "0", "0", "-q", "0", "0"],
    ["0", "0", "0", "0", "0", "1", "0", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "1", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "1", "0", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "1", "0"],
    ["0", "0", "0", "0", "0", "0", "0", "0", "0", "1"],
];

fn compare_table(check: &mut CheckResult, m: &KostkaMatrix, expected: &[[&str; 10]; 10]) {
    check.record(m.render_order() == SL4_ORDER, || {
        format!("index order {} differs from {SL4_ORDER}", m.render_order())
    });
    if m.dim() != 10 {
        check.record(false, || format!("dimension {} instead of 10", m.dim()));
        return;
    }
    for (i, row) in expected.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            let want: LaurentPolynomial = want.parse().expect("frozen table parses");
            let got = m.entry(i, j);
            check.record(got == &want, || format!("entry ({i},{j}) is {got}, expected {want}"));
        }
    }
}

pub fn sl4_matrix() -> Result<KostkaMatrix> {
    build_kostka_matrix(3, 4, 12, 0)
}

/// The 10×10 sl_4 matrix entry by entry.
pub fn check_sl4_matrix() -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("sl4 Kostka matrix");
    match sl4_matrix() {
        Ok(m) => compare_table(&mut c, &m, &SL4_MATRIX),
        Err(e) => c.record(false, || e.to_string()),
    }
    c.timed(start)
}

pub fn check_sl4_inverse() -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("sl4 inverse Kostka matrix");
    match sl4_matrix().and_then(|m| invert_unitriangular(&m)) {
        Ok(inv) => compare_table(&mut c, &inv, &SL4_INVERSE),
        Err(e) => c.record(false, || e.to_string()),
    }
    c.timed(start)
}

/// `𝒦_{(l1-i, l2-j), (l1, l2)} = δ_ij q^i` for sl_3.
pub fn check_sl3_closed_form(max_l: i64) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("sl3 closed form");
    for l1 in 0..=max_l {
        for l2 in 0..=max_l {
            let n = RectangularSequence::new(vec![l1 as u64, l2 as u64]).expect("nonnegative");
            for i in 0..=l1.min(l2) {
                for j in 0..=l1.min(l2) {
                    let lambda = RankedWeight::new(vec![l1 - i, l2 - j]).expect("rank 2");
                    let want = if i == j {
                        LaurentPolynomial::monomial(i, 1)
                    } else {
                        LaurentPolynomial::zero()
                    };
                    let got = kostka_poly(&lambda, &n);
                    c.record_result(got.as_ref().map(|g| g == &want).map_err(Clone::clone), || {
                        format!("K_{{{lambda},{n}}} = {:?}, expected {want}", got.as_ref().map(ToString::to_string))
                    });
                }
            }
        }
    }
    c.timed(start)
}

fn w(c: &[i64]) -> RankedWeight {
    RankedWeight::new(c.to_vec()).expect("nonempty")
}

fn seq(c: &[u64]) -> RectangularSequence {
    RectangularSequence::new(c.to_vec()).expect("nonempty")
}

pub fn check_kostka_examples() -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("Kostka polynomial examples");
    let cases: [(&[i64], &[u64], &str); 4] = [
        (&[0, 0, 0], &[1, 0, 1], "q"),
        (&[0, 2, 0], &[1, 2, 1], "q + q^2"),
        (&[0, 0], &[0, 0], "1"),
        (&[0, 0, 0], &[2, 0, 2], "q^2"),
    ];
    for (lambda, n, want) in cases {
        let want: LaurentPolynomial = want.parse().expect("literal");
        let got = kostka_poly(&w(lambda), &seq(n));
        c.record_result(got.as_ref().map(|g| g == &want).map_err(Clone::clone), || {
            format!("K_{{{:?},{:?}}} expected {want}", lambda, n)
        });
    }
    c.timed(start)
}

pub fn check_lr_examples() -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("tensor multiplicity examples");
    let cases: [(&[i64], Vec<&[i64]>, u64); 3] = [
        (&[0, 0, 0], vec![&[1, 0, 0], &[0, 0, 1]], 1),
        (&[0, 2, 0], vec![&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]], 2),
        (&[1, 2, 1], vec![&[1, 2, 1]], 1),
    ];
    for (lambda, mus, want) in cases {
        let mus: Vec<RankedWeight> = mus.into_iter().map(w).collect();
        let got = lr_multiplicity(&w(lambda), &mus);
        c.record_result(got.as_ref().map(|g| *g == want).map_err(Clone::clone), || {
            format!("multiplicity of {lambda:?}: {got:?}, expected {want}")
        });
    }
    c.timed(start)
}

pub fn check_character_examples() -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("character examples");
    let series = |coefs: &[i64], d: i64| TruncatedSeries::from_coefficients(coefs, d);
    let vac = char_v_rect(1, 1, 0, 1, 4);
    c.record_result(vac.map(|ch| ch.series(&w(&[0])) == series(&[1, 1, 2, 3, 5], 4)), || {
        "sl2 level-1 vacuum at weight 0".into()
    });
    let wk = weyl_kac_char(&w(&[0]), 1, 4);
    c.record_result(wk.map(|ch| ch.series(&w(&[0])) == series(&[1, 1, 2, 3, 5], 4)), || {
        "Weyl-Kac sl2 level-1 vacuum at weight 0".into()
    });
    let w0 = char_w_rect(1, 1, 0, 1, 3);
    c.record_result(w0.map(|ch| ch.series(&w(&[-2])) == series(&[0, 1, 1, 1], 3)), || {
        "principal subspace, l = 0, weight -2".into()
    });
    let w1 = char_w_rect(1, 1, 1, 1, 3);
    c.record_result(w1.map(|ch| ch.series(&w(&[-1])) == series(&[1, 1, 1, 1], 3)), || {
        "principal subspace, l = 1, weight -1".into()
    });
    c.timed(start)
}

/// Column `(1,2,1)` of `K^{-1}(q^{-1})`: the six-term expansion of `ch V_{(1,2,1)}`.
pub fn check_six_term_expansion() -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("six-term expansion of (1,2,1)");
    let expected: BTreeMap<Vec<u64>, LaurentPolynomial> = [
        (vec![1, 2, 1], "1"),
        (vec![2, 1, 0], "-q^-1"),
        (vec![0, 1, 2], "-q^-1"),
        (vec![0, 2, 0], "-q^-1 - q^-2"),
        (vec![1, 0, 1], "q^-2"),
        (vec![0, 0, 0], "-q^-3"),
    ]
    .into_iter()
    .map(|(n, p)| (n, p.parse().expect("literal")))
    .collect();
    match inverse_kostka_expansion(&w(&[1, 2, 1])) {
        Ok(terms) => {
            let got: BTreeMap<Vec<u64>, LaurentPolynomial> =
                terms.into_iter().map(|t| (t.n.counts().to_vec(), t.coefficient)).collect();
            c.record(got == expected, || format!("got {got:?}"));
        }
        Err(e) => c.record(false, || e.to_string()),
    }
    c.timed(start)
}

/// `ch 𝐕_{(1,2,1)} = Σ_λ 𝒦_{λ,(1,2,1)}(q^{-1}) ch V_λ` at `r = 3`, `k = 4`, with
/// the coefficients read from the frozen sl_4 matrix.
pub fn check_fusion_recombination(d: i64) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("fusion recombination, n = (1,2,1)");
    let labels: Vec<RankedWeight> = SL4_ORDER
        .split([';', ','])
        .collect::<Vec<_>>()
        .chunks(3)
        .map(|t| {
            let s = t.join(",");
            s.parse().expect("frozen label")
        })
        .collect();
    let col = labels.iter().position(|l| l == &w(&[1, 2, 1])).expect("label present");
    let run = || -> Result<bool> {
        let fusion = char_fusion_v(3, 4, &seq(&[1, 2, 1]), d)?;
        let mut sum: BTreeMap<RankedWeight, TruncatedSeries> = BTreeMap::new();
        for (row, lambda) in labels.iter().enumerate() {
            let coef: LaurentPolynomial = SL4_MATRIX[row][col].parse().expect("frozen entry");
            if coef.is_zero() {
                continue;
            }
            let coef = coef.reciprocal_q();
            let extra = -coef.min_exp().unwrap_or(0).min(0);
            let ch = char_v_general(lambda, 4, d + extra)?;
            for (wt, s) in ch.table() {
                let term = s.mul_poly(&coef).truncate(d)?;
                let e = sum.entry(wt.clone()).or_insert_with(|| TruncatedSeries::zero(d));
                *e = &*e + &term;
            }
        }
        sum.retain(|_, s| !s.is_zero());
        Ok(&sum == fusion.table())
    };
    c.record_result(run(), || format!("recombined characters differ through q^{d}"));
    c.timed(start)
}

/// `RectangularSequence`s of rank `r` with `Σ α n^(α) ≤ max_size`.
pub fn sequences_up_to(r: usize, max_size: u64) -> Vec<RectangularSequence> {
    fn rec(alpha: usize, r: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<RectangularSequence>) {
        if alpha > r {
            out.push(RectangularSequence::new(cur.clone()).expect("nonnegative"));
            return;
        }
        for n in 0..=left / alpha as u64 {
            cur.push(n);
            rec(alpha + 1, r, left - n * alpha as u64, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, r, max_size, &mut Vec::new(), &mut out);
    out
}

/// `𝒦_{λ,n}(1)` against the tensor product multiplicity of `⊗_α V(n^(α) ω_α)`.
pub fn check_lr_sweep(max_rank: usize, max_size: u64) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("Kostka at q = 1 vs tensor multiplicities");
    for r in 1..=max_rank {
        let h = r as u64 + 1;
        for n in sequences_up_to(r, max_size) {
            let rects = RectangleMultiset::from(&n);
            let size: u64 = n.counts().iter().enumerate().map(|(i, &x)| (i as u64 + 1) * x).sum();
            let width = n.counts().iter().sum::<u64>();
            let decomposition = match decompose_tensor(&rectangle_factors(&rects), r) {
                Ok(d) => d,
                Err(e) => {
                    c.record(false, || format!("{n}: {e}"));
                    continue;
                }
            };
            let mut lambdas: Vec<RankedWeight> = kostka_index_set(r, width, size, size % h)
                .iter()
                .filter_map(|p| partition_to_weight(p, r).ok())
                .collect();
            for lam in decomposition.keys() {
                if !lambdas.contains(lam) {
                    lambdas.push(lam.clone());
                }
            }
            for lam in lambdas {
                let want = decomposition.get(&lam).copied().unwrap_or(0);
                let got = kostka_poly(&lam, &n).map(|p| p.eval_at_one());
                c.record_result(got.as_ref().map(|g| *g == BigInt::from(want)).map_err(Clone::clone), || {
                    format!("λ = {lam}, n = {n}: 𝒦(1) = {got:?}, multiplicity {want}")
                });
            }
        }
    }
    c.timed(start)
}

/// Pairs `(λ̄, μ)` of partitions of each size up to `max_size`.
fn charge_cases(max_size: u64) -> Vec<(PartitionShape, PartitionShape)> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        let parts = partitions_of(n, n, n as usize);
        for lam in &parts {
            for mu in &parts {
                out.push((lam.clone(), mu.clone()));
            }
        }
    }
    out
}

/// `𝒦` for single-row rectangles `μ_p ω_1` at rank `r = |μ|`.
fn fermionic_single_rows(lam: &PartitionShape, mu: &PartitionShape) -> Result<LaurentPolynomial> {
    let r = mu.size() as usize;
    let lambda = partition_to_weight(lam, r)?;
    kostka_poly_rects(&lambda, &RectangleMultiset::single_rows(r, mu.parts())?)
}

/// The duality composite `𝒦_{λ,μ}(q) = q^{n(μ)} K̃_{λ̄,μ}(q^{-1})`, with `K̃` the
/// cocharge polynomial, which reduces to the charge polynomial.
pub fn check_charge_composite(max_size: u64) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("duality composite vs charge oracle");
    for (lam, mu) in charge_cases(max_size) {
        let run = || -> Result<(LaurentPolynomial, LaurentPolynomial)> {
            let k = fermionic_single_rows(&lam, &mu)?;
            let co = cocharge_kostka(&lam, &mu)?;
            let composite = co.reciprocal_q().shift(mu.n_statistic() as i64);
            Ok((k, composite))
        };
        match run() {
            Ok((k, composite)) => c.record(k == composite, || {
                format!(
                    "λ̄ = {lam}, μ = {mu}: fermionic {k}, composite {composite} (charge polynomial {})",
                    charge_kostka(&lam, &mu).map(|p| p.to_string()).unwrap_or_default()
                )
            }),
            Err(e) => c.record(false, || format!("λ̄ = {lam}, μ = {mu}: {e}")),
        }
    }
    c.timed(start)
}

/// The fermionic sum equals the cocharge Kostka-Foulkes polynomial.
pub fn check_fermionic_is_cocharge(max_size: u64) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("fermionic sum vs cocharge oracle");
    for (lam, mu) in charge_cases(max_size) {
        let run = || -> Result<bool> { Ok(fermionic_single_rows(&lam, &mu)? == cocharge_kostka(&lam, &mu)?) };
        c.record_result(run(), || format!("λ̄ = {lam}, μ = {mu}"));
    }
    c.timed(start)
}

pub fn check_charge_counts(max_size: u64) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("charge polynomial at q = 1 vs tableau count");
    for (lam, mu) in charge_cases(max_size) {
        let count = semistandard_tableaux(&lam, &mu).len();
        let got = charge_kostka(&lam, &mu).map(|p| p.eval_at_one());
        c.record_result(got.as_ref().map(|g| *g == BigInt::from(count)).map_err(Clone::clone), || {
            format!("λ̄ = {lam}, μ = {mu}: {got:?} vs {count} tableaux")
        });
    }
    c.timed(start)
}

/// Dominant weights of rank `r` and level at most `k`.
pub fn restricted_weights(r: usize, k: u64) -> Vec<RankedWeight> {
    sequences_level(r, k).into_iter().map(|s| s.weight()).collect()
}

fn sequences_level(r: usize, k: u64) -> Vec<RectangularSequence> {
    fn rec(r: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<RectangularSequence>) {
        if cur.len() == r {
            out.push(RectangularSequence::new(cur.clone()).expect("nonnegative"));
            return;
        }
        for n in 0..=left {
            cur.push(n);
            rec(r, left - n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, k, &mut Vec::new(), &mut out);
    out
}

/// `Some((l, β))` when `λ = l ω_β`; `λ = 0` gives `(0, 1)`.
pub fn as_rectangle(lambda: &RankedWeight) -> Option<(u64, usize)> {
    let nonzero: Vec<usize> = (0..lambda.rank()).filter(|&i| lambda.coords()[i] != 0).collect();
    match nonzero.as_slice() {
        [] => Some((0, 1)),
        [i] => Some((lambda.coords()[*i] as u64, i + 1)),
        _ => None,
    }
}

/// `(r, k, λ)` for `(r = 1, k ≤ 3)` and `(r = 2, k ≤ 2)`.
pub fn weyl_kac_sweep() -> Vec<(usize, u64, RankedWeight)> {
    let mut out = Vec::new();
    for (r, kmax) in [(1usize, 3u64), (2, 2)] {
        for k in 1..=kmax {
            for lam in restricted_weights(r, k) {
                out.push((r, k, lam));
            }
        }
    }
    out
}

/// Per-degree Weyl invariance and the top layer of the oracle itself.
pub fn check_weyl_kac_oracle_invariants(sweep: &[(usize, u64, RankedWeight)], d: i64) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("Weyl-Kac oracle invariants");
    for (_, k, lam) in sweep {
        let run = || -> Result<bool> {
            let ch = weyl_kac_char(lam, *k, d)?;
            ch.check_weyl_invariance()?;
            ch.check_module_invariants(lam)?;
            top_layer_matches(&ch, lam)
        };
        c.record_result(run(), || format!("k = {k}, λ = {lam}"));
    }
    c.timed(start)
}

fn top_layer_matches(ch: &WeightGradedCharacter, lambda: &RankedWeight) -> Result<bool> {
    let fc = finite_char(lambda)?;
    let layer = ch.degree_layer(0);
    let total: BigInt = layer.values().sum();
    Ok(layer == *fc && total == weyl_dimension(lambda)?)
}

/// Rectangular and general fermionic characters against the Weyl-Kac oracle.
pub fn check_weyl_kac_agreement(sweep: &[(usize, u64, RankedWeight)], d: i64) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("fermionic characters vs Weyl-Kac");
    for (r, k, lam) in sweep {
        let oracle = match weyl_kac_char(lam, *k, d) {
            Ok(o) => o,
            Err(e) => {
                c.record(false, || format!("oracle at k = {k}, λ = {lam}: {e}"));
                continue;
            }
        };
        if let Some((l, beta)) = as_rectangle(lam) {
            let rect = char_v_rect(*r, *k, l, beta, d);
            c.record_result(rect.map(|ch| ch.same_series(&oracle)), || {
                format!("rectangular formula, k = {k}, λ = {lam}")
            });
        }
        let general = char_v_general(lam, *k, d);
        c.record_result(general.map(|ch| ch.same_series(&oracle)), || {
            format!("general formula, k = {k}, λ = {lam}")
        });
    }
    c.timed(start)
}

/// The assembled `ch V_λ` has no negative coefficients or exponents.
pub fn check_positivity(sweep: &[(usize, u64, RankedWeight)], d: i64, include_sl4: bool) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("positivity of assembled characters");
    let mut cases: Vec<(u64, RankedWeight, i64)> = sweep.iter().map(|(_, k, l)| (*k, l.clone(), d)).collect();
    if include_sl4 {
        cases.push((4, w(&[1, 2, 1]), d.min(4)));
    }
    for (k, lam, dd) in cases {
        let run = || -> Result<bool> {
            let ch = char_v_general(&lam, k, dd)?;
            Ok(ch.all_coefficients_nonnegative() && ch.valuation().is_none_or(|v| v >= 0))
        };
        c.record_result(run(), || format!("k = {k}, λ = {lam}, D = {dd}"));
    }
    c.timed(start)
}

/// Weyl invariance per degree and the degree-0 layer of every `ch V` output.
pub fn check_weyl_invariance_and_top(sweep: &[(usize, u64, RankedWeight)], d: i64) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("Weyl invariance and top layer");
    let mut cases: Vec<(usize, u64, RankedWeight, i64)> =
        sweep.iter().map(|(r, k, l)| (*r, *k, l.clone(), d)).collect();
    cases.push((3, 4, w(&[1, 2, 1]), d.min(4)));
    for (r, k, lam, dd) in cases {
        let mut outputs = Vec::new();
        if let Some((l, beta)) = as_rectangle(&lam) {
            outputs.push(char_v_rect(r, k, l, beta, dd));
        }
        outputs.push(char_v_general(&lam, k, dd));
        for out in outputs {
            let run = || -> Result<bool> {
                let ch = out?;
                ch.check_weyl_invariance()?;
                top_layer_matches(&ch, &lam)
            };
            c.record_result(run(), || format!("k = {k}, λ = {lam}"));
        }
    }
    c.timed(start)
}

/// `(r, k, l, β)` with `r ≤ max_rank`, `k ≤ max_level`, `0 ≤ l ≤ k`, every `β`.
pub fn rectangle_sweep(max_rank: usize, max_level: u64) -> Vec<(usize, u64, u64, usize)> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        for k in 1..=max_level {
            for l in 0..=k {
                for beta in 1..=r {
                    out.push((r, k, l, beta));
                }
            }
        }
    }
    out
}

fn rect_weight(r: usize, l: u64, beta: usize) -> RankedWeight {
    let mut c = vec![0i64; r];
    c[beta - 1] = l as i64;
    w(&c)
}

/// General assembly collapses to the rectangular formulas for `λ = l ω_β`.
pub fn check_rectangular_collapse(max_rank: usize, max_level: u64, d: i64) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("rectangular collapse of the general assembly");
    for (r, k, l, beta) in rectangle_sweep(max_rank, max_level) {
        let lam = rect_weight(r, l, beta);
        let v = (|| Ok(char_v_general(&lam, k, d)?.same_series(&char_v_rect(r, k, l, beta, d)?)))();
        c.record_result(v, || format!("V, r = {r}, k = {k}, λ = {lam}"));
        let wres = (|| Ok(char_w_general(&lam, k, d)?.same_series(&char_w_rect(r, k, l, beta, d)?)))();
        c.record_result(wres, || format!("W, r = {r}, k = {k}, λ = {lam}"));
    }
    c.timed(start)
}

/// One-line and two-line parametrizations agree, for rectangles and for every
/// fusion sequence within the level.
pub fn check_parametrizations(max_rank: usize, max_level: u64, d: i64) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("one-line vs two-line parametrizations");
    for (r, k, l, beta) in rectangle_sweep(max_rank, max_level) {
        let v = (|| Ok(char_v_rect(r, k, l, beta, d)?.same_series(&char_v_rect_two_line(r, k, l, beta, d)?)))();
        c.record_result(v, || format!("V, r = {r}, k = {k}, l = {l}, β = {beta}"));
        let wres = (|| Ok(char_w_rect(r, k, l, beta, d)?.same_series(&char_w_rect_two_line(r, k, l, beta, d)?)))();
        c.record_result(wres, || format!("W, r = {r}, k = {k}, l = {l}, β = {beta}"));
    }
    for r in 1..=max_rank {
        for k in 1..=max_level {
            for n in sequences_level(r, k) {
                let v = (|| {
                    Ok(char_fusion_v_one_line(r, k, &n, d)?.same_series(&char_fusion_v_two_line(r, k, &n, d)?))
                })();
                c.record_result(v, || format!("fusion V, r = {r}, k = {k}, n = {n}"));
            }
        }
    }
    c.timed(start)
}

/// `W^{(N)}` at `N = D + 1` matches `V` through `D`, and grows with `N`.
pub fn check_translation_convergence(d: i64) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("translated principal subspaces converge");
    let mut cases = Vec::new();
    for l in 0..=1 {
        cases.push((1usize, 1u64, l, 1usize));
    }
    for l in 0..=2 {
        for beta in 1..=2 {
            cases.push((2, 2, l, beta));
        }
    }
    let big_n = (d + 1) as u64;
    for (r, k, l, beta) in cases {
        let run = || -> Result<(bool, bool)> {
            let target = char_v_rect(r, k, l, beta, d)?;
            let mut prev: Option<WeightGradedCharacter> = None;
            let mut monotone = true;
            for n in 0..=big_n {
                let cur = char_w_rect_translated(r, k, l, beta, n, d)?;
                if let Some(p) = &prev {
                    monotone &= p
                        .table()
                        .iter()
                        .all(|(wt, s)| s.terms().all(|(e, x)| &cur.coefficient(wt, e) >= x));
                }
                prev = Some(cur);
            }
            Ok((prev.expect("at least one N").same_series(&target), monotone))
        };
        match run() {
            Ok((conv, mono)) => {
                c.record(conv, || format!("r = {r}, k = {k}, l = {l}, β = {beta}: N = {big_n} differs from V"));
                c.record(mono, || format!("r = {r}, k = {k}, l = {l}, β = {beta}: not monotone in N"));
            }
            Err(e) => c.record(false, || format!("r = {r}, k = {k}, l = {l}, β = {beta}: {e}")),
        }
    }
    c.timed(start)
}

/// Fusion W at a single rectangle equals the rectangular principal subspace.
pub fn check_single_factor_fusion(max_rank: usize, max_level: u64, d: i64) -> CheckResult {
    let start = Instant::now();
    let mut c = CheckResult::new("single-rectangle fusion");
    for (r, k, l, beta) in rectangle_sweep(max_rank, max_level) {
        let mut counts = vec![0u64; r];
        counts[beta - 1] = l;
        let n = seq(&counts);
        let res = (|| Ok(char_fusion_w(r, k, &n, d)?.same_series(&char_w_rect(r, k, l, beta, d)?)))();
        c.record_result(res, || format!("r = {r}, k = {k}, n = {n}"));
    }
    c.timed(start)
}
