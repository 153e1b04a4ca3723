//! Fermionic q-characters of principal subspaces, fusion products and
//! integrable modules of affine `sl(r+1)`, graded by finite weight.
//!
//! Two parametrizations are implemented for each rectangular family: the
//! "one-line" sums over `m_a^(α)`, `a = 1..k`, and the "two-line" sums over
//! `m̃ ∈ ℤ^r` plus `m_a^(α)`, `a < k`, with a congruence constraint. They are
//! related by the exact identity
//! `½ xᵀA_k x = M²/(2k) + ½ yᵀC_{k-1}^{-1} y` (`M = Σ a x_a`, `y = x_{<k}`).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::kostka::{kostka_matrix_pair, RectangleMultiset};
use crate::lattice::QuadraticForm;
use crate::qseries::{inverse_pochhammer_series, PochhammerOrder, TruncatedSeries};
use crate::weights::{
    cartan_inverse_times, cartan_matrix, partition_to_weight, simple_reflection,
    weight_to_partition, RankedWeight, RectangularSequence,
};

/// Which formula produced a character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    VRect,
    VGeneral,
    WRect,
    WGeneral,
    FusionW,
    FusionV,
    WRectTranslated,
    /// Independent evaluation by the Weyl-Kac character formula.
    WeylKac,
}

impl Formula {
    pub fn as_str(self) -> &'static str {
        match self {
            Formula::VRect => "V_rect",
            Formula::VGeneral => "V_general",
            Formula::WRect => "W_rect",
            Formula::WGeneral => "W_general",
            Formula::FusionW => "fusion_W",
            Formula::FusionV => "fusion_V",
            Formula::WRectTranslated => "W_rect_translated",
            Formula::WeylKac => "weyl_kac",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "V_rect" => Formula::VRect,
            "V_general" => Formula::VGeneral,
            "W_rect" => Formula::WRect,
            "W_general" => Formula::WGeneral,
            "fusion_W" => Formula::FusionW,
            "fusion_V" => Formula::FusionV,
            "W_rect_translated" => Formula::WRectTranslated,
            "weyl_kac" => Formula::WeylKac,
            _ => return Err(Error::Parse(format!("unknown formula {s:?}"))),
        })
    }

    /// Fusion characters are labelled by a rectangle sequence, the rest by a highest weight.
    pub fn labelled_by_sequence(self) -> bool {
        matches!(self, Formula::FusionW | Formula::FusionV)
    }
}

/// `Σ_w S_w(q) e^w` with each `S_w` exact through `max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightGradedCharacter {
    pub rank: usize,
    pub level: u64,
    pub max_degree: i64,
    pub formula: Formula,
    /// Highest weight, or the rectangle counts `n` for fusion characters.
    pub label: RankedWeight,
    table: BTreeMap<RankedWeight, TruncatedSeries>,
}

impl WeightGradedCharacter {
    fn new(rank: usize, level: u64, max_degree: i64, formula: Formula, label: RankedWeight) -> Self {
        Self {
            rank,
            level,
            max_degree,
            formula,
            label,
            table: BTreeMap::new(),
        }
    }

    pub fn table(&self) -> &BTreeMap<RankedWeight, TruncatedSeries> {
        &self.table
    }

    /// The series at `w`, zero if absent.
    pub fn series(&self, w: &RankedWeight) -> TruncatedSeries {
        self.table
            .get(w)
            .cloned()
            .unwrap_or_else(|| TruncatedSeries::zero(self.max_degree))
    }

    pub fn coefficient(&self, w: &RankedWeight, degree: i64) -> BigInt {
        self.table.get(w).map(|s| s.coeff(degree)).unwrap_or_default()
    }

    /// Weight multiplicities at a fixed degree.
    pub fn degree_layer(&self, degree: i64) -> BTreeMap<RankedWeight, BigInt> {
        self.table
            .iter()
            .map(|(w, s)| (w.clone(), s.coeff(degree)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    fn add_series(&mut self, w: RankedWeight, s: &TruncatedSeries) {
        let entry = self
            .table
            .entry(w)
            .or_insert_with(|| TruncatedSeries::zero(s.max_degree()));
        *entry = &*entry + s;
    }

    fn prune(&mut self) {
        self.table.retain(|_, s| !s.is_zero());
    }

    /// Same data with every series cut at `max_degree`.
    pub fn truncate(&self, max_degree: i64) -> Result<Self> {
        let mut out = Self::new(self.rank, self.level, max_degree, self.formula, self.label.clone());
        for (w, s) in &self.table {
            out.table.insert(w.clone(), s.truncate(max_degree)?);
        }
        out.prune();
        Ok(out)
    }

    /// Termwise equality of the weight tables through the smaller cutoff.
    pub fn same_series(&self, other: &Self) -> bool {
        let d = self.max_degree.min(other.max_degree);
        match (self.truncate(d), other.truncate(d)) {
            (Ok(a), Ok(b)) => a.table == b.table,
            _ => false,
        }
    }

    /// First weight where the two tables differ through the smaller cutoff.
    pub fn first_difference(&self, other: &Self) -> Option<(RankedWeight, TruncatedSeries, TruncatedSeries)> {
        let d = self.max_degree.min(other.max_degree);
        let a = self.truncate(d).ok()?;
        let b = other.truncate(d).ok()?;
        let weights: std::collections::BTreeSet<RankedWeight> =
            a.table.keys().chain(b.table.keys()).cloned().collect();
        weights.into_iter().find_map(|w| {
            let (x, y) = (a.series(&w), b.series(&w));
            (x != y).then_some((w, x, y))
        })
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.table.values().all(TruncatedSeries::all_coefficients_nonnegative)
    }

    /// Lowest exponent anywhere in the table.
    pub fn valuation(&self) -> Option<i64> {
        self.table.values().filter_map(TruncatedSeries::valuation).min()
    }

    /// Per-degree invariance under every simple reflection.
    pub fn check_weyl_invariance(&self) -> Result<()> {
        for (w, s) in &self.table {
            for i in 1..=self.rank {
                let image = simple_reflection(w, i);
                if &self.series(&image) != s {
                    return Err(Error::Consistency(format!(
                        "{} character not invariant under s_{i}: weight {w} has {s}, {image} has {}",
                        self.formula.as_str(),
                        self.series(&image)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Nonnegative coefficients, no negative exponents, constant term 1 at the highest weight.
    pub fn check_module_invariants(&self, highest: &RankedWeight) -> Result<()> {
        if let Some(v) = self.valuation().filter(|&v| v < 0) {
            return Err(Error::Consistency(format!(
                "{} character has a term at q^{v}",
                self.formula.as_str()
            )));
        }
        if let Some((w, s)) = self.table.iter().find(|(_, s)| !s.all_coefficients_nonnegative()) {
            return Err(Error::Consistency(format!(
                "{} character has a negative coefficient at weight {w}: {s}",
                self.formula.as_str()
            )));
        }
        if self.max_degree >= 0 && !self.coefficient(highest, 0).is_one() {
            return Err(Error::Consistency(format!(
                "constant term at the highest weight {highest} is {}",
                self.coefficient(highest, 0)
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let label_key = if self.formula.labelled_by_sequence() { "n" } else { "lambda" };
        let mut obj = serde_json::Map::new();
        obj.insert("rank".into(), json!(self.rank));
        obj.insert("level".into(), json!(self.level));
        obj.insert("formula".into(), json!(self.formula.as_str()));
        obj.insert(label_key.into(), json!(self.label.coords()));
        obj.insert("max_degree".into(), json!(self.max_degree));
        obj.insert(
            "table".into(),
            Value::Array(
                self.table
                    .iter()
                    .map(|(w, s)| json!({ "weight": w.coords(), "series": s.to_json() }))
                    .collect(),
            ),
        );
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("character JSON: {what}"));
        let ints = |v: &Value| -> Result<Vec<i64>> {
            v.as_array()
                .ok_or_else(|| bad("expected an integer array"))?
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| bad("expected an integer")))
                .collect()
        };
        let rank = v.get("rank").and_then(Value::as_u64).ok_or_else(|| bad("rank"))? as usize;
        let level = v.get("level").and_then(Value::as_u64).ok_or_else(|| bad("level"))?;
        let formula = Formula::parse(v.get("formula").and_then(Value::as_str).ok_or_else(|| bad("formula"))?)?;
        let label_key = if formula.labelled_by_sequence() { "n" } else { "lambda" };
        let label = RankedWeight::new(ints(v.get(label_key).ok_or_else(|| bad(label_key))?)?)?;
        let max_degree = v.get("max_degree").and_then(Value::as_i64).ok_or_else(|| bad("max_degree"))?;
        let mut ch = Self::new(rank, level, max_degree, formula, label);
        for row in v.get("table").and_then(Value::as_array).ok_or_else(|| bad("table"))? {
            let w = RankedWeight::new(ints(row.get("weight").ok_or_else(|| bad("weight"))?)?)?;
            if w.rank() != rank {
                return Err(bad("weight length differs from rank"));
            }
            let s = TruncatedSeries::from_json(row.get("series").ok_or_else(|| bad("series"))?)?;
            if s.max_degree() != max_degree {
                return Err(bad("series cutoff differs from max_degree"));
            }
            if ch.table.insert(w, s).is_some() {
                return Err(bad("duplicate weight"));
            }
        }
        Ok(ch)
    }

    /// One line per weight: `[w1,...,wr]: series`.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (w, s) in &self.table {
            let _ = writeln!(
                out,
                "[{}]: {s}",
                w.coords().iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            );
        }
        out
    }
}

fn validate(r: usize, k: u64, d: i64) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    if d < 0 {
        return Err(Error::InvalidArgument(format!("max degree {d} is negative")));
    }
    if k > 64 {
        return Err(Error::InvalidArgument(format!("level {k} is out of range")));
    }
    Ok(())
}

fn rect_multiset(r: usize, k: u64, l: u64, beta: usize) -> Result<RectangleMultiset> {
    if !(1..=r).contains(&beta) {
        return Err(Error::InvalidArgument(format!("beta = {beta} outside 1..={r}")));
    }
    if l > k {
        return Err(Error::LevelViolation {
            what: format!("rectangular weight {l}ω_{beta}"),
            found: l as i64,
            level: k as i64,
        });
    }
    RectangleMultiset::new(r, vec![(beta, l)])
}

fn rect_weight(r: usize, l: u64, beta: usize) -> RankedWeight {
    let mut c = vec![0i64; r];
    c[beta - 1] = l as i64;
    RankedWeight::new(c).expect("rank is positive")
}

fn sequence_multiset(k: u64, n: &RectangularSequence) -> Result<RectangleMultiset> {
    if n.level() > k {
        return Err(Error::LevelViolation {
            what: format!("rectangle sequence {n}"),
            found: n.level() as i64,
            level: k as i64,
        });
    }
    Ok(RectangleMultiset::from(n))
}

/// Level zero has only the trivial module.
fn trivial(r: usize, d: i64, formula: Formula, label: RankedWeight) -> WeightGradedCharacter {
    let mut ch = WeightGradedCharacter::new(r, 0, d, formula, label);
    ch.table.insert(RankedWeight::zero(r), TruncatedSeries::one(d));
    ch
}

/// Dense coefficients of `∏ 1/(q)_{m_i}` for degrees `0..len`.
fn pochhammer_product(ms: impl Iterator<Item = u64>, len: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); len];
    if len == 0 {
        return c;
    }
    c[0] = BigInt::one();
    for m in ms {
        for i in 1..=(m as usize).min(len - 1) {
            for n in i..len {
                let prev = c[n - i].clone();
                c[n] += prev;
            }
        }
    }
    c
}

fn add_term(table: &mut BTreeMap<RankedWeight, TruncatedSeries>, w: RankedWeight, e: i64, coefs: &[BigInt], d: i64) {
    let s = table.entry(w).or_insert_with(|| TruncatedSeries::zero(d));
    for (i, c) in coefs.iter().enumerate() {
        s.add_term(e + i as i64, c.clone());
    }
}

/// Multiplies every series by `1/(q)_∞^r`, keeping the cutoff `d`.
fn divide_by_eta_power(table: &mut BTreeMap<RankedWeight, TruncatedSeries>, r: usize, d: i64) {
    let floor = table.values().filter_map(TruncatedSeries::valuation).min().unwrap_or(0).min(0);
    let base = inverse_pochhammer_series(PochhammerOrder::Infinite, d - floor);
    let mut eta = TruncatedSeries::one(d - floor);
    for _ in 0..r {
        eta = &eta * &base;
    }
    for s in table.values_mut() {
        *s = (&*s * &eta).truncate(d).expect("cutoff only decreases");
    }
}

/// One-line sums: `Σ q^{½ m⃗ᵀ(C⊗A)m⃗ - m⃗ᵀ(id⊗A)n⃗} / ∏(q)_{m_a^(α)} e^{ωᵀn - ωᵀC m}`
/// over `m⃗ ∈ ℤ_{≥0}^{r×k}`, or with `m_k^(α) ∈ ℤ` and a global `1/(q)_∞^r` when
/// `integrable` is set.
fn one_line_sum(
    r: usize,
    k: u64,
    rects: &RectangleMultiset,
    integrable: bool,
    d: i64,
) -> Result<BTreeMap<RankedWeight, TruncatedSeries>> {
    let ku = k as usize;
    let dim = r * ku;
    let c = cartan_matrix(r);
    let idx = |alpha: usize, a: usize| alpha * ku + (a - 1);
    let mut gram = vec![vec![0i64; dim]; dim];
    for al in 0..r {
        for be in 0..r {
            if c[al][be] == 0 {
                continue;
            }
            for a in 1..=ku {
                for b in 1..=ku {
                    gram[idx(al, a)][idx(be, b)] = c[al][be] * a.min(b) as i64;
                }
            }
        }
    }
    let mut linear = vec![0i64; dim];
    for &(alpha, w) in rects.rects() {
        for a in 1..=ku {
            linear[idx(alpha - 1, a)] += (w as usize).min(a) as i64;
        }
    }
    let lower = (0..dim)
        .map(|i| if integrable && i % ku == ku - 1 { None } else { Some(0) })
        .collect();
    let form = QuadraticForm::new(gram, linear, 1, lower)?;
    let n = rects.weight_coords();
    let points = form.points_up_to_checked(d)?;
    let mut table = BTreeMap::new();
    for p in points {
        if p.twice_scaled_value % 2 != 0 {
            return Err(Error::Consistency(format!("half-integral exponent at {:?}", p.z)));
        }
        let e = (p.twice_scaled_value / 2) as i64;
        let totals: Vec<i64> = (0..r)
            .map(|al| (1..=ku).map(|a| a as i64 * p.z[idx(al, a)]).sum())
            .collect();
        let weight = RankedWeight::new(n.clone())?.sub_roots(&totals);
        let denoms = (0..dim)
            .filter(|i| !(integrable && i % ku == ku - 1))
            .map(|i| p.z[i] as u64);
        let coefs = pochhammer_product(denoms, (d - e + 1) as usize);
        add_term(&mut table, weight, e, &coefs, d);
    }
    if integrable {
        divide_by_eta_power(&mut table, r, d);
    }
    table.retain(|_, s| !s.is_zero());
    Ok(table)
}

/// Which two-line sum to evaluate.
#[derive(Clone, Debug)]
enum TwoLine {
    /// `m̃ ∈ ℤ^r` with a global `1/(q)_∞^r`.
    Integrable,
    /// `m̃ ≥ -kN_α`, `m̄ ≤ m̃ + kN_α`, extra factor `1/(q)_{(m̃-m̄)/k + N_α}`.
    Principal { shifts: Vec<i64> },
}

/// Two-line sums in the variables `(m̃, m_{a<k})`, all exponents over the common denominator `k`.
fn two_line_sum(
    r: usize,
    k: u64,
    rects: &RectangleMultiset,
    kind: &TwoLine,
    d: i64,
) -> Result<BTreeMap<RankedWeight, TruncatedSeries>> {
    let ki = k as i64;
    let km1 = k as usize - 1;
    let dim = r + r * km1;
    let c = cartan_matrix(r);
    // k·C_{k-1}^{-1}, 1-based.
    let bk = |a: usize, b: usize| ki * a.min(b) as i64 - (a * b) as i64;
    let yidx = |alpha: usize, a: usize| r + alpha * km1 + (a - 1);
    let mut gram = vec![vec![0i64; dim]; dim];
    for al in 0..r {
        for be in 0..r {
            gram[al][be] = c[al][be];
            if c[al][be] == 0 {
                continue;
            }
            for a in 1..=km1 {
                for b in 1..=km1 {
                    gram[yidx(al, a)][yidx(be, b)] = c[al][be] * bk(a, b);
                }
            }
        }
    }
    let n = rects.weight_coords();
    let mut linear = vec![0i64; dim];
    linear[..r].copy_from_slice(&n);
    for &(alpha, w) in rects.rects() {
        if (w as usize) < k as usize {
            for a in 1..=km1 {
                linear[yidx(alpha - 1, a)] += bk(w as usize, a);
            }
        }
    }
    let shifts = match kind {
        TwoLine::Integrable => None,
        TwoLine::Principal { shifts } => Some(shifts),
    };
    let lower = (0..dim)
        .map(|i| match (i < r, shifts) {
            (true, None) => None,
            (true, Some(s)) => Some(-ki * s[i]),
            (false, _) => Some(0),
        })
        .collect();
    let mut form = QuadraticForm::new(gram, linear, ki, lower)?;
    for al in 0..r {
        let mut coeffs = vec![0i64; dim];
        for a in 1..=km1 {
            coeffs[yidx(al, a)] = a as i64;
        }
        form = form.with_congruence(al, ki, coeffs)?;
    }
    let points = form.points_up_to_checked(d)?;
    let mut table = BTreeMap::new();
    for p in points {
        let mt = &p.z[..r];
        let mbar: Vec<i64> = (0..r)
            .map(|al| (1..=km1).map(|a| a as i64 * p.z[yidx(al, a)]).sum())
            .collect();
        debug_assert!((0..r).all(|al| (mt[al] - mbar[al]).rem_euclid(ki) == 0));
        let mut extra = Vec::new();
        if let Some(s) = shifts {
            if (0..r).any(|al| mbar[al] > mt[al] + ki * s[al]) {
                continue;
            }
            extra = (0..r).map(|al| ((mt[al] - mbar[al]) / ki + s[al]) as u64).collect();
        }
        let num = p.twice_scaled_value;
        if num % (2 * ki as i128) != 0 {
            return Err(Error::Consistency(format!(
                "non-integral exponent {num}/{} at {:?}",
                2 * ki,
                p.z
            )));
        }
        let e = (num / (2 * ki as i128)) as i64;
        let weight = RankedWeight::new(n.clone())?.sub_roots(mt);
        let denoms = p.z[r..].iter().map(|&x| x as u64).chain(extra);
        let coefs = pochhammer_product(denoms, (d - e + 1) as usize);
        add_term(&mut table, weight, e, &coefs, d);
    }
    if shifts.is_none() {
        divide_by_eta_power(&mut table, r, d);
    }
    table.retain(|_, s| !s.is_zero());
    Ok(table)
}

pub(crate) fn finish(
    r: usize,
    k: u64,
    d: i64,
    formula: Formula,
    label: RankedWeight,
    table: BTreeMap<RankedWeight, TruncatedSeries>,
) -> WeightGradedCharacter {
    let mut ch = WeightGradedCharacter::new(r, k, d, formula, label);
    ch.table = table;
    ch.prune();
    ch
}

/// Principal subspace `W_{lω_β}`, one-line form.
pub fn char_w_rect(r: usize, k: u64, l: u64, beta: usize, d: i64) -> Result<WeightGradedCharacter> {
    validate(r, k, d)?;
    let rects = rect_multiset(r, k, l, beta)?;
    let label = rect_weight(r, l, beta);
    if k == 0 {
        return Ok(trivial(r, d, Formula::WRect, label));
    }
    Ok(finish(r, k, d, Formula::WRect, label, one_line_sum(r, k, &rects, false, d)?))
}

/// Principal subspace `W_{lω_β}` in the two-line form (`m^(α)` and `m_{a<k}^(α)`).
pub fn char_w_rect_two_line(r: usize, k: u64, l: u64, beta: usize, d: i64) -> Result<WeightGradedCharacter> {
    let mut ch = char_w_rect_translated(r, k, l, beta, 0, d)?;
    ch.formula = Formula::WRect;
    Ok(ch)
}

/// The translated principal subspace `W^{(N)}_{lω_β}`, `N_α = N α(r+1-α)`,
/// graded so that the highest weight of `V_{lω_β}` sits at degree 0.
pub fn char_w_rect_translated(
    r: usize,
    k: u64,
    l: u64,
    beta: usize,
    big_n: u64,
    d: i64,
) -> Result<WeightGradedCharacter> {
    validate(r, k, d)?;
    let rects = rect_multiset(r, k, l, beta)?;
    let label = rect_weight(r, l, beta);
    if k == 0 {
        return Ok(trivial(r, d, Formula::WRectTranslated, label));
    }
    let shifts = (1..=r as i64).map(|a| big_n as i64 * a * (r as i64 + 1 - a)).collect();
    let table = two_line_sum(r, k, &rects, &TwoLine::Principal { shifts }, d)?;
    Ok(finish(r, k, d, Formula::WRectTranslated, label, table))
}

/// Integrable module `V_{lω_β}`, one-line form with `m_k^(α) ∈ ℤ`.
pub fn char_v_rect(r: usize, k: u64, l: u64, beta: usize, d: i64) -> Result<WeightGradedCharacter> {
    validate(r, k, d)?;
    let rects = rect_multiset(r, k, l, beta)?;
    let label = rect_weight(r, l, beta);
    if k == 0 {
        return Ok(trivial(r, d, Formula::VRect, label));
    }
    Ok(finish(r, k, d, Formula::VRect, label, one_line_sum(r, k, &rects, true, d)?))
}

/// Integrable module `V_{lω_β}` as a sum over `m̃ ∈ ℤ^r` of string-function blocks.
pub fn char_v_rect_two_line(r: usize, k: u64, l: u64, beta: usize, d: i64) -> Result<WeightGradedCharacter> {
    validate(r, k, d)?;
    let rects = rect_multiset(r, k, l, beta)?;
    let label = rect_weight(r, l, beta);
    if k == 0 {
        return Ok(trivial(r, d, Formula::VRect, label));
    }
    let table = two_line_sum(r, k, &rects, &TwoLine::Integrable, d)?;
    Ok(finish(r, k, d, Formula::VRect, label, table))
}

/// Fusion product of principal subspaces for the rectangles `n^(α) ω_α`.
pub fn char_fusion_w(r: usize, k: u64, n: &RectangularSequence, d: i64) -> Result<WeightGradedCharacter> {
    validate(r, k, d)?;
    check_rank(r, n.rank())?;
    let rects = sequence_multiset(k, n)?;
    let label = n.weight();
    if k == 0 {
        return Ok(trivial(r, d, Formula::FusionW, label));
    }
    Ok(finish(r, k, d, Formula::FusionW, label, one_line_sum(r, k, &rects, false, d)?))
}

/// The `N → ∞` translated fusion product. Both parametrizations are evaluated
/// and must agree.
pub fn char_fusion_v(r: usize, k: u64, n: &RectangularSequence, d: i64) -> Result<WeightGradedCharacter> {
    let (a, b) = rayon::join(
        || char_fusion_v_one_line(r, k, n, d),
        || char_fusion_v_two_line(r, k, n, d),
    );
    let (a, b) = (a?, b?);
    if let Some((w, x, y)) = a.first_difference(&b) {
        return Err(Error::Consistency(format!(
            "fusion character parametrizations differ at weight {w}: {x} vs {y}"
        )));
    }
    Ok(a)
}

pub fn char_fusion_v_one_line(r: usize, k: u64, n: &RectangularSequence, d: i64) -> Result<WeightGradedCharacter> {
    validate(r, k, d)?;
    check_rank(r, n.rank())?;
    let rects = sequence_multiset(k, n)?;
    let label = n.weight();
    if k == 0 {
        return Ok(trivial(r, d, Formula::FusionV, label));
    }
    Ok(finish(r, k, d, Formula::FusionV, label, one_line_sum(r, k, &rects, true, d)?))
}

pub fn char_fusion_v_two_line(r: usize, k: u64, n: &RectangularSequence, d: i64) -> Result<WeightGradedCharacter> {
    validate(r, k, d)?;
    check_rank(r, n.rank())?;
    let rects = sequence_multiset(k, n)?;
    let label = n.weight();
    if k == 0 {
        return Ok(trivial(r, d, Formula::FusionV, label));
    }
    let table = two_line_sum(r, k, &rects, &TwoLine::Integrable, d)?;
    Ok(finish(r, k, d, Formula::FusionV, label, table))
}

fn check_rank(r: usize, got: usize) -> Result<()> {
    if r != got {
        return Err(Error::InvalidArgument(format!("expected {r} coordinates, got {got}")));
    }
    Ok(())
}

/// One term `c(q^{-1}) · ch 𝐕_ν` (or `ch 𝐖_ν`) of the inverse-Kostka expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub n: RectangularSequence,
    /// `(K^{-1}(q^{-1}))_{ν,λ}`.
    pub coefficient: crate::qseries::LaurentPolynomial,
}

/// The nonzero entries of column `λ` of `K^{-1}(q^{-1})`, in index order.
pub fn inverse_kostka_expansion(lambda: &RankedWeight) -> Result<Vec<ExpansionTerm>> {
    let r = lambda.rank();
    let lp = weight_to_partition(lambda)?;
    let h = r as u64 + 1;
    let pair = kostka_matrix_pair(r, lp.width(), lp.size(), lp.size() % h)?;
    let inv = &pair.1;
    let col = inv
        .position(&lp)
        .ok_or_else(|| Error::Consistency(format!("{lambda} missing from its own index set")))?;
    (0..inv.dim())
        .filter(|&i| !inv.entry(i, col).is_zero())
        .map(|i| {
            Ok(ExpansionTerm {
                n: RectangularSequence::from_weight(&partition_to_weight(&inv.index()[i], r)?)?,
                coefficient: inv.entry(i, col).reciprocal_q(),
            })
        })
        .collect()
}

fn assemble<F>(
    lambda: &RankedWeight,
    k: u64,
    d: i64,
    formula: Formula,
    summand: F,
) -> Result<WeightGradedCharacter>
where
    F: Fn(&RectangularSequence, i64) -> Result<WeightGradedCharacter> + Sync,
{
    let r = lambda.rank();
    validate(r, k, d)?;
    lambda.require_restricted(k as i64)?;
    let terms = inverse_kostka_expansion(lambda)?;
    let parts: Vec<WeightGradedCharacter> = terms
        .par_iter()
        .map(|t| {
            // Negative powers in the coefficient lower the cutoff; compute deeper.
            let extra = -t.coefficient.min_exp().unwrap_or(0).min(0);
            let ch = summand(&t.n, d + extra)?;
            let mut scaled = WeightGradedCharacter::new(r, k, d, formula, lambda.clone());
            for (w, s) in ch.table() {
                scaled.table.insert(w.clone(), s.mul_poly(&t.coefficient).truncate(d)?);
            }
            Ok(scaled)
        })
        .collect::<Result<_>>()?;
    let mut out = WeightGradedCharacter::new(r, k, d, formula, lambda.clone());
    for p in parts {
        for (w, s) in p.table {
            out.add_series(w, &s);
        }
    }
    out.prune();
    out.check_module_invariants(lambda)?;
    Ok(out)
}

/// `ch V_λ = Σ_ν (K^{-1}(q^{-1}))_{ν,λ} ch 𝐕_ν` for any level-`k` restricted `λ`.
pub fn char_v_general(lambda: &RankedWeight, k: u64, d: i64) -> Result<WeightGradedCharacter> {
    assemble(lambda, k, d, Formula::VGeneral, |n, dd| char_fusion_v(lambda.rank(), k, n, dd))
}

/// `ch W_λ = Σ_ν (K^{-1}(q^{-1}))_{ν,λ} ch 𝐖_ν`.
pub fn char_w_general(lambda: &RankedWeight, k: u64, d: i64) -> Result<WeightGradedCharacter> {
    assemble(lambda, k, d, Formula::WGeneral, |n, dd| char_fusion_w(lambda.rank(), k, n, dd))
}

/// `q^{-frac} · series`, with `0 ≤ frac < 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringFunction {
    pub frac: Ratio<i64>,
    pub series: TruncatedSeries,
}

/// Divides each weight's series by `q^{(1/2k) m̃ᵀC m̃ - (1/k) λ·m̃}` where
/// `w = λ - ωᵀC m̃`. The exponent lies in `(1/k)ℤ`; its fractional part is
/// reported separately rather than folded into the integer-graded series.
pub fn string_functions(
    ch: &WeightGradedCharacter,
    lambda: &RankedWeight,
) -> Result<BTreeMap<RankedWeight, StringFunction>> {
    let r = ch.rank;
    let k = ch.level as i64;
    if k == 0 {
        return Err(Error::InvalidArgument("string functions need a positive level".into()));
    }
    let c = cartan_matrix(r);
    let mut out = BTreeMap::new();
    for (w, s) in ch.table() {
        let diff = lambda.sub(w);
        let mt = cartan_inverse_times(r, diff.coords());
        if mt.iter().any(|x| !x.is_integer()) {
            return Err(Error::Consistency(format!(
                "weight {w} is not in the root lattice coset of {lambda}"
            )));
        }
        let mt: Vec<i64> = mt.iter().map(Ratio::to_integer).collect();
        let cm: i64 = (0..r)
            .map(|i| mt[i] * (0..r).map(|j| c[i][j] * mt[j]).sum::<i64>())
            .sum();
        let lm: i64 = lambda.coords().iter().zip(&mt).map(|(a, b)| a * b).sum();
        let e = Ratio::new(cm, 2 * k) - Ratio::new(lm, k);
        let floor = e.floor().to_integer();
        let frac = e - Ratio::from_integer(floor);
        debug_assert!(!frac.is_negative());
        out.insert(
            w.clone(),
            StringFunction {
                frac,
                series: s.shift(-floor),
            },
        );
    }
    Ok(out)
}
