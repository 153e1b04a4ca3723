//! Fermionic generalized Kostka polynomials and the unitriangular Kostka matrix.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::qseries::{gaussian_binomial, LaurentPolynomial};
use crate::weights::{
    cartan_inverse_nonneg_integral, partition_to_weight, partitions_in_box, partitions_of,
    weight_to_partition, PartitionShape, RankedWeight, RectangularSequence,
};

/// A multiset of rectangles `a ω_α`, stored as `(α, a)` with `α` 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RectangleMultiset {
    rank: usize,
    rects: Vec<(usize, u64)>,
}

impl RectangleMultiset {
    pub fn new(rank: usize, rects: Vec<(usize, u64)>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidArgument("rank must be at least 1".into()));
        }
        if let Some(&(alpha, _)) = rects.iter().find(|(a, _)| *a == 0 || *a > rank) {
            return Err(Error::InvalidArgument(format!(
                "rectangle height {alpha} outside 1..={rank}"
            )));
        }
        let rects = rects.into_iter().filter(|&(_, w)| w > 0).collect();
        Ok(Self { rank, rects })
    }

    /// One row of length `a` per entry: rectangles `a ω_1`.
    pub fn single_rows(rank: usize, rows: &[u64]) -> Result<Self> {
        Self::new(rank, rows.iter().map(|&a| (1, a)).collect())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rects(&self) -> &[(usize, u64)] {
        &self.rects
    }

    /// `Σ a ω_α` in fundamental-weight coordinates.
    pub fn weight_coords(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for &(alpha, a) in &self.rects {
            v[alpha - 1] += a as i64;
        }
        v
    }

    fn widths_by_height(&self) -> Vec<Vec<u64>> {
        let mut w = vec![Vec::new(); self.rank];
        for &(alpha, a) in &self.rects {
            w[alpha - 1].push(a);
        }
        w
    }
}

impl From<&RectangularSequence> for RectangleMultiset {
    fn from(n: &RectangularSequence) -> Self {
        Self {
            rank: n.rank(),
            rects: n
                .counts()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(i, &c)| (i + 1, c))
                .collect(),
        }
    }
}

/// The mode numbers `m_a^(α)`, held as one partition `ν^(α)` per `α`
/// (`m_a^(α)` is the number of parts of `ν^(α)` equal to `a`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModeVector {
    nus: Vec<PartitionShape>,
}

impl ModeVector {
    pub fn new(nus: Vec<PartitionShape>) -> Self {
        Self { nus }
    }

    pub fn rank(&self) -> usize {
        self.nus.len()
    }

    pub fn partitions(&self) -> &[PartitionShape] {
        &self.nus
    }

    /// `m_a^(α)`, both indices 1-based.
    pub fn multiplicity(&self, alpha: usize, a: u64) -> u64 {
        self.nus[alpha - 1].parts().iter().filter(|&&p| p == a).count() as u64
    }

    /// `m^(α) = Σ_a a m_a^(α)`.
    pub fn total(&self, alpha: usize) -> u64 {
        self.nus[alpha - 1].size()
    }

    /// `P_a^(α)` for the given rectangles.
    pub fn vacancy(&self, rects: &RectangleMultiset, alpha: usize, a: u64) -> i64 {
        vacancy(&rects.widths_by_height()[alpha - 1], &self.nus, alpha - 1, a)
    }
}

/// `Q_a(ν) = Σ_parts min(a, p)`.
fn q_sum(nu: &PartitionShape, a: u64) -> i64 {
    nu.parts().iter().map(|&p| p.min(a) as i64).sum()
}

fn vacancy(widths: &[u64], nus: &[PartitionShape], alpha: usize, a: u64) -> i64 {
    let mut p: i64 = widths.iter().map(|&w| w.min(a) as i64).sum();
    p -= 2 * q_sum(&nus[alpha], a);
    if alpha > 0 {
        p += q_sum(&nus[alpha - 1], a);
    }
    if alpha + 1 < nus.len() {
        p += q_sum(&nus[alpha + 1], a);
    }
    p
}

/// `½ m⃗ᵀ(C_r ⊗ A) m⃗` returned as `(numerator, 2)`-style doubled value.
fn doubled_quadratic_form(nus: &[PartitionShape]) -> i64 {
    let r = nus.len();
    let mut total = 0i64;
    for alpha in 0..r {
        for &p in nus[alpha].parts() {
            total += 2 * q_sum(&nus[alpha], p);
            if alpha > 0 {
                total -= q_sum(&nus[alpha - 1], p);
            }
            if alpha + 1 < r {
                total -= q_sum(&nus[alpha + 1], p);
            }
        }
    }
    total
}

/// `½ m⃗ᵀ(C_r ⊗ A) m⃗` as an exact rational.
pub fn quadratic_form(m: &ModeVector) -> num_rational::Ratio<i64> {
    num_rational::Ratio::new(doubled_quadratic_form(&m.nus), 2)
}

/// `n(R) = Σ_{p<p'} min(α_p, α_p') min(a_p, a_p')`.
pub fn n_statistic(n: &RectangularSequence) -> u64 {
    n_statistic_rects(&RectangleMultiset::from(n))
}

pub fn n_statistic_rects(rects: &RectangleMultiset) -> u64 {
    let r = rects.rects();
    let mut s = 0;
    for (i, &(a1, w1)) in r.iter().enumerate() {
        for &(a2, w2) in &r[i + 1..] {
            s += a1.min(a2) as u64 * w1.min(w2);
        }
    }
    s
}

/// Which vacancy numbers must be nonnegative for a mode vector to contribute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VacancyRule {
    /// Only rows `a` actually occurring in `ν^(α)`; the Gaussian binomial is 1 elsewhere.
    OccupiedRows,
    /// Every `a ≥ 1`.
    AllRows,
}

/// Enumeration controls for [`kostka_poly_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KostkaOptions {
    /// Largest part allowed in each `ν^(α)`; `None` means only `m^(α)` bounds it.
    pub part_cap: Option<u64>,
    pub vacancy_rule: VacancyRule,
}

impl KostkaOptions {
    /// Parts capped at `k_eff = max(1, total rectangle width)`.
    pub fn capped(rects: &RectangleMultiset) -> Self {
        let width: u64 = rects.rects().iter().map(|&(_, a)| a).sum();
        Self {
            part_cap: Some(width.max(1)),
            vacancy_rule: VacancyRule::OccupiedRows,
        }
    }
}

/// `𝒦_{λ,𝛍}(q)` for a rectangle sequence with one rectangle per height.
pub fn kostka_poly(lambda: &RankedWeight, n: &RectangularSequence) -> Result<LaurentPolynomial> {
    if lambda.rank() != n.rank() {
        return Err(Error::InvalidArgument(format!(
            "rank mismatch: weight {lambda} vs sequence {n}"
        )));
    }
    kostka_poly_rects(lambda, &RectangleMultiset::from(n))
}

/// `𝒦_{λ,R}(q)` for an arbitrary multiset of rectangles.
pub fn kostka_poly_rects(lambda: &RankedWeight, rects: &RectangleMultiset) -> Result<LaurentPolynomial> {
    kostka_poly_with(lambda, rects, KostkaOptions::capped(rects))
}

pub fn kostka_poly_with(
    lambda: &RankedWeight,
    rects: &RectangleMultiset,
    opts: KostkaOptions,
) -> Result<LaurentPolynomial> {
    lambda.require_dominant()?;
    let r = rects.rank();
    if lambda.rank() != r {
        return Err(Error::InvalidArgument(format!("rank mismatch for weight {lambda}")));
    }
    let diff: Vec<i64> = rects
        .weight_coords()
        .iter()
        .zip(lambda.coords())
        .map(|(n, l)| n - l)
        .collect();
    let Some(m) = cartan_inverse_nonneg_integral(r, &diff) else {
        return Ok(LaurentPolynomial::zero());
    };
    let widths = rects.widths_by_height();
    let choices: Vec<Vec<PartitionShape>> = m
        .iter()
        .map(|&ma| partitions_of(ma, opts.part_cap.unwrap_or(ma).min(ma), usize::MAX))
        .collect();
    let mut acc = LaurentPolynomial::zero();
    let mut nus = Vec::with_capacity(r);
    enumerate(&choices, &widths, opts.vacancy_rule, &mut nus, &mut acc)?;
    Ok(acc)
}

fn admissible(widths: &[Vec<u64>], nus: &[PartitionShape], alpha: usize, rule: VacancyRule) -> bool {
    match rule {
        VacancyRule::OccupiedRows => {
            let mut parts = nus[alpha].parts().to_vec();
            parts.dedup();
            parts.iter().all(|&a| vacancy(&widths[alpha], nus, alpha, a) >= 0)
        }
        VacancyRule::AllRows => {
            // Beyond every part and width, P_a is constant.
            let top = nus
                .iter()
                .flat_map(|n| n.parts().first().copied())
                .chain(widths[alpha].iter().copied())
                .max()
                .unwrap_or(0)
                .max(1);
            (1..=top).all(|a| vacancy(&widths[alpha], nus, alpha, a) >= 0)
        }
    }
}

fn enumerate(
    choices: &[Vec<PartitionShape>],
    widths: &[Vec<u64>],
    rule: VacancyRule,
    nus: &mut Vec<PartitionShape>,
    acc: &mut LaurentPolynomial,
) -> Result<()> {
    let depth = nus.len();
    let r = choices.len();
    if depth == r {
        if !admissible(widths, nus, r - 1, rule) {
            return Ok(());
        }
        *acc = &*acc + &term(widths, nus)?;
        return Ok(());
    }
    for nu in &choices[depth] {
        nus.push(nu.clone());
        // P^(α-1) depends only on ν^(α-2..α), all fixed now.
        if depth == 0 || admissible(widths, nus, depth - 1, rule) {
            enumerate(choices, widths, rule, nus, acc)?;
        }
        nus.pop();
    }
    Ok(())
}

fn term(widths: &[Vec<u64>], nus: &[PartitionShape]) -> Result<LaurentPolynomial> {
    let doubled = doubled_quadratic_form(nus);
    if doubled % 2 != 0 {
        return Err(Error::Consistency(format!(
            "non-integral exponent {doubled}/2 for mode vector {nus:?}"
        )));
    }
    let mut prod = LaurentPolynomial::monomial(doubled / 2, 1);
    for (alpha, nu) in nus.iter().enumerate() {
        let mut parts = nu.parts().to_vec();
        parts.dedup();
        for a in parts {
            let p = vacancy(&widths[alpha], nus, alpha, a);
            if p < 0 {
                return Ok(LaurentPolynomial::zero());
            }
            let ma = nu.parts().iter().filter(|&&x| x == a).count() as u64;
            prod = &prod * &*cached_binomial(ma, p as u64)?;
        }
    }
    Ok(prod)
}

fn cached_binomial(m: u64, p: u64) -> Result<Arc<LaurentPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u64), Arc<LaurentPolynomial>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("binomial cache poisoned").get(&(m, p)) {
        return Ok(v.clone());
    }
    let v = Arc::new(gaussian_binomial(m, p)?);
    cache
        .lock()
        .expect("binomial cache poisoned")
        .insert((m, p), v.clone());
    Ok(v)
}

/// Square matrix of Laurent polynomials over an ordered partition index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaMatrix {
    rank: usize,
    index: Vec<PartitionShape>,
    entries: Vec<Vec<LaurentPolynomial>>,
    inverse: bool,
}

impl KostkaMatrix {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn index(&self) -> &[PartitionShape] {
        &self.index
    }

    pub fn entries(&self) -> &[Vec<LaurentPolynomial>] {
        &self.entries
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPolynomial {
        &self.entries[row][col]
    }

    pub fn position(&self, p: &PartitionShape) -> Option<usize> {
        self.index.binary_search(p).ok()
    }

    /// Entry addressed by weights in fundamental coordinates.
    pub fn entry_by_weights(&self, row: &RankedWeight, col: &RankedWeight) -> Option<&LaurentPolynomial> {
        let i = self.position(&weight_to_partition(row).ok()?)?;
        let j = self.position(&weight_to_partition(col).ok()?)?;
        Some(self.entry(i, j))
    }

    pub fn weight_labels(&self) -> Vec<RankedWeight> {
        self.index
            .iter()
            .map(|p| partition_to_weight(p, self.rank).expect("index partitions have at most r parts"))
            .collect()
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        (0..self.dim()).all(|i| {
            self.entries[i][i].is_one() && (0..i).all(|j| self.entries[i][j].is_zero())
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.index != other.index {
            return Err(Error::InvalidArgument("index sets differ".into()));
        }
        let n = self.dim();
        let entries = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(LaurentPolynomial::zero(), |acc, k| {
                            &acc + &(&self.entries[i][k] * &other.entries[k][j])
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(Self {
            rank: self.rank,
            index: self.index.clone(),
            entries,
            inverse: false,
        })
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| {
                let e = &self.entries[i][j];
                if i == j { e.is_one() } else { e.is_zero() }
            })
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "order": self.index.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
            "entries": self
                .entries
                .iter()
                .map(|row| row.iter().map(LaurentPolynomial::to_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "inverse": self.inverse,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("kostka matrix JSON: {what}"));
        let rank = v.get("rank").and_then(Value::as_u64).ok_or_else(|| bad("rank"))? as usize;
        let index = v
            .get("order")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("order"))?
            .iter()
            .map(|p| {
                let parts = p
                    .as_array()
                    .ok_or_else(|| bad("order entry"))?
                    .iter()
                    .map(|x| x.as_u64().ok_or_else(|| bad("part")))
                    .collect::<Result<Vec<_>>>()?;
                PartitionShape::new(parts)
            })
            .collect::<Result<Vec<_>>>()?;
        let entries = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("entries"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("row"))?
                    .iter()
                    .map(LaurentPolynomial::from_json)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if entries.len() != index.len() || entries.iter().any(|r| r.len() != index.len()) {
            return Err(bad("entries shape does not match order"));
        }
        let inverse = v.get("inverse").and_then(Value::as_bool).ok_or_else(|| bad("inverse"))?;
        Ok(Self {
            rank,
            index,
            entries,
            inverse,
        })
    }

    /// The index set as weight labels, grouped by first part.
    pub fn render_order(&self) -> String {
        let groups = self.blocks();
        let labels = self.weight_labels();
        groups
            .iter()
            .map(|g| g.clone().map(|i| labels[i].to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Block layout: columns separated by `|` between groups of equal first part,
    /// a rule between row groups.
    pub fn render_text(&self) -> String {
        let n = self.dim();
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..n)
            .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(1))
            .collect();
        let blocks = self.blocks();
        let render_row = |i: usize| {
            blocks
                .iter()
                .map(|b| {
                    b.clone()
                        .map(|j| format!("{:<w$}", cells[i][j], w = widths[j]))
                        .collect::<Vec<_>>()
                        .join("  ")
                })
                .collect::<Vec<_>>()
                .join(" | ")
                .trim_end()
                .to_string()
        };
        let mut out = String::from("[ ");
        for (bi, b) in blocks.iter().enumerate() {
            if bi > 0 {
                let rule_len = render_row(0).len() + 2;
                let _ = write!(out, "\n  {}", "-".repeat(rule_len));
            }
            for i in b.clone() {
                if i > 0 {
                    out.push_str("\n  ");
                }
                let _ = write!(out, "[{}]", render_row(i));
            }
        }
        out.push_str(" ]");
        out
    }

    fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut out = Vec::new();
        let mut start = 0;
        for i in 1..=self.dim() {
            if i == self.dim() || self.index[i].width() != self.index[start].width() {
                out.push(start..i);
                start = i;
            }
        }
        out
    }
}

/// Matrix index set: partitions with at most `r` parts, first part at most
/// `width_bound`, size at most `size_max` and congruent to `residue` mod `r+1`.
pub fn kostka_index_set(r: usize, width_bound: u64, size_max: u64, residue: u64) -> Vec<PartitionShape> {
    let h = r as u64 + 1;
    partitions_in_box(r, width_bound, size_max)
        .into_iter()
        .filter(|p| p.size() % h == residue % h)
        .collect()
}

type MatrixKey = (usize, u64, u64, u64);

fn matrix_cache() -> &'static Mutex<HashMap<MatrixKey, Arc<(KostkaMatrix, KostkaMatrix)>>> {
    static CACHE: OnceLock<Mutex<HashMap<MatrixKey, Arc<(KostkaMatrix, KostkaMatrix)>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn build_kostka_matrix(r: usize, width_bound: u64, size_max: u64, residue: u64) -> Result<KostkaMatrix> {
    Ok(kostka_matrix_pair(r, width_bound, size_max, residue)?.0.clone())
}

/// `(K, K^{-1})`, cached per index set for the life of the process.
pub fn kostka_matrix_pair(
    r: usize,
    width_bound: u64,
    size_max: u64,
    residue: u64,
) -> Result<Arc<(KostkaMatrix, KostkaMatrix)>> {
    if r == 0 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    let key = (r, width_bound, size_max, residue % (r as u64 + 1));
    if let Some(hit) = matrix_cache().lock().expect("matrix cache poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let k = compute_kostka_matrix(r, width_bound, size_max, residue)?;
    let inv = invert_unitriangular(&k)?;
    let pair = Arc::new((k, inv));
    matrix_cache()
        .lock()
        .expect("matrix cache poisoned")
        .insert(key, pair.clone());
    Ok(pair)
}

fn compute_kostka_matrix(r: usize, width_bound: u64, size_max: u64, residue: u64) -> Result<KostkaMatrix> {
    let index = kostka_index_set(r, width_bound, size_max, residue);
    let n = index.len();
    let weights: Vec<RankedWeight> = index
        .iter()
        .map(|p| partition_to_weight(p, r))
        .collect::<Result<_>>()?;
    let seqs: Vec<RectangularSequence> = weights
        .iter()
        .map(RectangularSequence::from_weight)
        .collect::<Result<_>>()?;
    let flat: Vec<LaurentPolynomial> = (0..n * n)
        .into_par_iter()
        .map(|ij| kostka_poly(&weights[ij / n], &seqs[ij % n]))
        .collect::<Result<_>>()?;
    let entries: Vec<Vec<LaurentPolynomial>> = flat.chunks(n.max(1)).map(<[_]>::to_vec).collect();
    let m = KostkaMatrix {
        rank: r,
        index,
        entries,
        inverse: false,
    };
    if !m.is_upper_unitriangular() {
        return Err(Error::Consistency(format!(
            "Kostka matrix for r={r}, width {width_bound}, size {size_max} is not upper unitriangular"
        )));
    }
    Ok(m)
}

/// Back-substitution over `ℤ[q, q^{-1}]`.
pub fn invert_unitriangular(k: &KostkaMatrix) -> Result<KostkaMatrix> {
    if !k.is_upper_unitriangular() {
        return Err(Error::InvalidArgument("matrix is not upper unitriangular".into()));
    }
    let n = k.dim();
    let columns: Vec<Vec<LaurentPolynomial>> = (0..n)
        .into_par_iter()
        .map(|j| {
            let mut col = vec![LaurentPolynomial::zero(); n];
            col[j] = LaurentPolynomial::one();
            for i in (0..j).rev() {
                let mut s = LaurentPolynomial::zero();
                for t in i + 1..=j {
                    if !k.entries[i][t].is_zero() && !col[t].is_zero() {
                        s = &s + &(&k.entries[i][t] * &col[t]);
                    }
                }
                col[i] = -&s;
            }
            col
        })
        .collect();
    let entries = (0..n)
        .map(|i| (0..n).map(|j| columns[j][i].clone()).collect())
        .collect();
    Ok(KostkaMatrix {
        rank: k.rank,
        index: k.index.clone(),
        entries,
        inverse: !k.inverse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> RankedWeight {
        RankedWeight::new(c.to_vec()).unwrap()
    }

    fn n(c: &[u64]) -> RectangularSequence {
        RectangularSequence::new(c.to_vec()).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka_poly(&w(&[0, 0, 0]), &n(&[1, 0, 1])).unwrap(), poly(&[(1, 1)]));
        assert_eq!(kostka_poly(&w(&[0, 2, 0]), &n(&[1, 2, 1])).unwrap(), poly(&[(1, 1), (2, 1)]));
        assert_eq!(kostka_poly(&w(&[1, 2, 1]), &n(&[1, 2, 1])).unwrap(), LaurentPolynomial::one());
        assert_eq!(kostka_poly(&w(&[0, 0]), &n(&[1, 1])).unwrap(), poly(&[(1, 1)]));
        assert_eq!(kostka_poly(&w(&[0, 0]), &n(&[0, 0])).unwrap(), LaurentPolynomial::one());
        // Non-integral C^{-1}(n - l).
        assert!(kostka_poly(&w(&[1, 0, 0]), &n(&[0, 0, 0])).unwrap().is_zero());
        assert!(matches!(kostka_poly(&w(&[-1, 0]), &n(&[1, 0])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn quadratic_form_examples() {
        let p = |c: &[u64]| PartitionShape::new(c.to_vec()).unwrap();
        assert_eq!(quadratic_form(&ModeVector::new(vec![p(&[]), p(&[])])), 0.into());
        assert_eq!(quadratic_form(&ModeVector::new(vec![p(&[1])])), 1.into());
        assert_eq!(quadratic_form(&ModeVector::new(vec![p(&[1]), p(&[1])])), 1.into());
        let mv = ModeVector::new(vec![p(&[2, 1]), p(&[1])]);
        assert_eq!(mv.multiplicity(1, 2), 1);
        assert_eq!(mv.total(1), 3);
    }

    #[test]
    fn n_statistic_examples() {
        assert_eq!(n_statistic(&n(&[0, 3, 0])), 0);
        assert_eq!(n_statistic(&n(&[1, 0, 1])), 1);
        assert_eq!(n_statistic(&n(&[1, 2, 1])), 4);
        let rows = RectangleMultiset::single_rows(4, &[2, 1, 1]).unwrap();
        assert_eq!(n_statistic_rects(&rows), 3);
    }

    #[test]
    fn vacancy_numbers() {
        let rects = RectangleMultiset::from(&n(&[1, 0, 1]));
        let p = |c: &[u64]| PartitionShape::new(c.to_vec()).unwrap();
        // λ = 0, n = (1,0,1): m = (1,1,1), single mode vector with all parts 1.
        let mv = ModeVector::new(vec![p(&[1]), p(&[1]), p(&[1])]);
        assert_eq!(mv.vacancy(&rects, 1, 1), 0);
        assert_eq!(mv.vacancy(&rects, 2, 1), 0);
        assert_eq!(mv.vacancy(&rects, 3, 1), 0);
    }

    #[test]
    fn trivial_matrix() {
        let k = build_kostka_matrix(3, 0, 12, 0).unwrap();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.render_text(), "[ [1] ]");
        let inv = invert_unitriangular(&k).unwrap();
        assert!(inv.is_identity());
    }

    #[test]
    fn json_round_trip() {
        let k = build_kostka_matrix(2, 2, 6, 0).unwrap();
        let back = KostkaMatrix::from_json(&k.to_json()).unwrap();
        assert_eq!(back, k);
        assert_eq!(back.to_json().to_string(), k.to_json().to_string());
    }
}
