//! Cartan data of `sl(r+1)`, weights in the fundamental-weight basis,
//! partitions, and the affine Weyl translation.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
pub type IntMatrix = Vec<Vec<i64>>;

/// `λ = Σ l_α ω_α` for `sl(r+1)`; the rank is the number of coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankedWeight {
    coords: Vec<i64>,
}

impl RankedWeight {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidArgument("rank must be at least 1".into()));
        }
        Ok(Self { coords })
    }

    pub fn zero(rank: usize) -> Self {
        assert!(rank >= 1, "rank must be at least 1");
        Self {
            coords: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// `Σ l_α`, the pairing with the highest coroot.
    pub fn level(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_restricted(&self, k: i64) -> bool {
        self.is_dominant() && self.level() <= k
    }

    pub fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.to_string()))
        }
    }

    pub fn require_restricted(&self, k: i64) -> Result<()> {
        self.require_dominant()?;
        if self.level() > k {
            return Err(Error::LevelViolation {
                what: format!("weight {self}"),
                found: self.level(),
                level: k,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        Self {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        Self {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    /// `l - C_r v` where `v` is in the simple-root basis.
    pub fn sub_roots(&self, v: &[i64]) -> Self {
        let cv = mat_vec(&cartan_matrix(self.rank()), v);
        Self {
            coords: self.coords.iter().zip(cv).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for RankedWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.coords))
    }
}

impl FromStr for RankedWeight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_int_list(s)?)
    }
}

/// Weakly decreasing nonnegative parts; trailing zeros are stripped on construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PartitionShape {
    parts: Vec<u64>,
}

impl PartitionShape {
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn width(&self) -> u64 {
        self.part(0)
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_statistic(&self) -> u64 {
        self.parts.iter().enumerate().map(|(i, &p)| i as u64 * p).sum()
    }

    pub fn conjugate(&self) -> Self {
        let w = self.width() as usize;
        let parts = (1..=w as u64)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u64)
            .collect();
        Self { parts }
    }

    /// Renders exactly `len` parts, zero-padded, e.g. `[2,2,0]`.
    pub fn display_padded(&self, len: usize) -> String {
        let parts: Vec<u64> = (0..len.max(self.len())).map(|i| self.part(i)).collect();
        format!("[{}]", join(&parts))
    }
}

impl fmt::Display for PartitionShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", join(&self.parts))
    }
}

// Lexicographic on stripped parts coincides with the zero-padded comparison.
impl Ord for PartitionShape {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for PartitionShape {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `𝛍 = (n^(1) ω_1, ..., n^(r) ω_r)`: one rectangle of height `α` and width `n^(α)` per `α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RectangularSequence {
    counts: Vec<u64>,
}

impl RectangularSequence {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidArgument("rank must be at least 1".into()));
        }
        Ok(Self { counts })
    }

    pub fn rank(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `Σ n^(α)`, the level of the weight `Σ n^(α) ω_α`.
    pub fn level(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `Σ n^(α) ω_α`.
    pub fn weight(&self) -> RankedWeight {
        RankedWeight {
            coords: self.counts.iter().map(|&c| c as i64).collect(),
        }
    }

    pub fn from_weight(w: &RankedWeight) -> Result<Self> {
        w.require_dominant()?;
        Self::new(w.coords.iter().map(|&c| c as u64).collect())
    }

    pub fn require_level(&self, k: i64) -> Result<()> {
        if self.level() as i64 > k {
            return Err(Error::LevelViolation {
                what: format!("rectangle sequence {self}"),
                found: self.level() as i64,
                level: k,
            });
        }
        Ok(())
    }
}

impl fmt::Display for RectangularSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.counts))
    }
}

impl FromStr for RectangularSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = parse_int_list(s)?;
        if v.iter().any(|&c| c < 0) {
            return Err(Error::Parse(format!("rectangle counts must be nonnegative: {s}")));
        }
        Self::new(v.into_iter().map(|c| c as u64).collect())
    }
}

/// `Λ = λ + kΛ₀ - mδ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeightLabel {
    pub finite: RankedWeight,
    pub level: i64,
    /// The `m` in `-mδ`.
    pub delta: i64,
}

impl AffineWeightLabel {
    pub fn highest(finite: RankedWeight, level: i64) -> Self {
        Self {
            finite,
            level,
            delta: 0,
        }
    }
}

pub fn cartan_matrix(r: usize) -> IntMatrix {
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// `A_{ab} = min(a,b)` with 1-based indices.
pub fn min_matrix(k: usize) -> IntMatrix {
    (1..=k as i64)
        .map(|a| (1..=k as i64).map(|b| a.min(b)).collect())
        .collect()
}

/// `C_r^{-1} v` over the rationals.
pub fn cartan_inverse_times(r: usize, v: &[i64]) -> Vec<Ratio<i64>> {
    assert_eq!(v.len(), r, "vector length must equal the rank");
    let h = r as i64 + 1;
    (1..=r as i64)
        .map(|i| {
            let num: i64 = (1..=r as i64)
                .zip(v)
                .map(|(j, &x)| (h * i.min(j) - i * j) * x)
                .sum();
            Ratio::new(num, h)
        })
        .collect()
}

/// `C_r^{-1} v` when it is a nonnegative integer vector.
pub fn cartan_inverse_nonneg_integral(r: usize, v: &[i64]) -> Option<Vec<u64>> {
    cartan_inverse_times(r, v)
        .into_iter()
        .map(|x| (x.is_integer() && *x.numer() >= 0).then(|| x.to_integer() as u64))
        .collect()
}

pub fn mat_vec(m: &IntMatrix, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// `λ̄_β = Σ_{α ≥ β} l_α`.
pub fn weight_to_partition(w: &RankedWeight) -> Result<PartitionShape> {
    w.require_dominant()?;
    PartitionShape::new(suffix_sums(w.coords().iter().map(|&c| c as u64)))
}

/// Inverse of [`weight_to_partition`]: `l_α = p_α - p_{α+1}`. Parts beyond `r` are
/// full columns and drop out.
pub fn partition_to_weight(p: &PartitionShape, r: usize) -> Result<RankedWeight> {
    if p.len() > r + 1 {
        return Err(Error::InvalidArgument(format!(
            "partition {p} has more than {} rows",
            r + 1
        )));
    }
    RankedWeight::new((0..r).map(|a| p.part(a) as i64 - p.part(a + 1) as i64).collect())
}

/// Horizontal concatenation of the rectangles: `ν_β = Σ_{α ≥ β} n^(α)`.
pub fn nu_concat(n: &RectangularSequence) -> PartitionShape {
    PartitionShape {
        parts: suffix_sums(n.counts().iter().copied()),
    }
    .normalized()
}

/// `λ̄` of length `r+1`: `m_r` full columns prepended to `λ`.
pub fn pad_partition(lambda: &RankedWeight, m_r: u64) -> Result<PartitionShape> {
    let base = weight_to_partition(lambda)?;
    let r = lambda.rank();
    PartitionShape::new((0..=r).map(|i| m_r + if i < r { base.part(i) } else { 0 }).collect())
}

pub fn order_compare(a: &PartitionShape, b: &PartitionShape) -> Ordering {
    a.cmp(b)
}

pub fn dominance_leq(a: &PartitionShape, b: &PartitionShape) -> bool {
    if a.size() != b.size() {
        return false;
    }
    let (mut sa, mut sb) = (0, 0);
    for i in 0..a.len().max(b.len()) {
        sa += a.part(i);
        sb += b.part(i);
        if sa > sb {
            return false;
        }
    }
    true
}

/// `t_N(Λ)`: finite part `l + k C_r N`, delta coefficient `m + N·l + ½ k NᵀC_r N`.
pub fn affine_translate(w: &AffineWeightLabel, n: &[i64]) -> AffineWeightLabel {
    let r = w.finite.rank();
    assert_eq!(n.len(), r, "translation vector length must equal the rank");
    let cn = mat_vec(&cartan_matrix(r), n);
    let k = w.level;
    let coords = w.finite.coords().iter().zip(&cn).map(|(l, c)| l + k * c).collect();
    let ncn: i64 = n.iter().zip(&cn).map(|(a, b)| a * b).sum();
    let nl: i64 = n.iter().zip(w.finite.coords()).map(|(a, b)| a * b).sum();
    // NᵀCN is even since C has even diagonal.
    AffineWeightLabel {
        finite: RankedWeight { coords },
        level: k,
        delta: w.delta + nl + k * ncn / 2,
    }
}

/// `s_i` with `i` 1-based.
pub fn simple_reflection(w: &RankedWeight, i: usize) -> RankedWeight {
    let r = w.rank();
    assert!((1..=r).contains(&i), "reflection index out of range");
    let li = w.coords[i - 1];
    let mut coords = w.coords.clone();
    coords[i - 1] -= 2 * li;
    if i >= 2 {
        coords[i - 2] += li;
    }
    if i < r {
        coords[i] += li;
    }
    RankedWeight { coords }
}

/// Moves `w` into the dominant chamber. Returns the dominant representative and
/// the parity of the number of reflections used.
pub fn to_dominant(w: &RankedWeight) -> (RankedWeight, bool) {
    let mut cur = w.clone();
    let mut odd = false;
    while let Some(i) = cur.coords.iter().position(|&c| c < 0) {
        cur = simple_reflection(&cur, i + 1);
        odd = !odd;
    }
    (cur, odd)
}

/// Dimension of the irreducible `sl(r+1)` module with highest weight `w`.
pub fn weyl_dimension(w: &RankedWeight) -> Result<BigInt> {
    w.require_dominant()?;
    let l = w.coords();
    let r = l.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..r {
        let mut s = 0i64;
        for j in i..r {
            s += l[j];
            let h = (j - i + 1) as i64;
            num *= s + h;
            den *= h;
        }
    }
    let (q, rem) = (&num / &den, &num % &den);
    if !rem.is_zero() {
        return Err(Error::Consistency(format!("Weyl dimension of {w} is not integral")));
    }
    Ok(q)
}

/// Partitions of `n` with at most `max_len` parts, each at most `max_part`, in
/// decreasing lexicographic order.
pub fn partitions_of(n: u64, max_part: u64, max_len: usize) -> Vec<PartitionShape> {
    fn rec(n: u64, max_part: u64, max_len: usize, cur: &mut Vec<u64>, out: &mut Vec<PartitionShape>) {
        if n == 0 {
            out.push(PartitionShape { parts: cur.clone() });
            return;
        }
        if max_len == 0 || max_part == 0 || n > max_part.saturating_mul(max_len as u64) {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, max_len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions fitting in a `max_len × max_width` box with size at most `max_size`,
/// sorted ascending.
pub fn partitions_in_box(max_len: usize, max_width: u64, max_size: u64) -> Vec<PartitionShape> {
    let cap = max_size.min(max_width.saturating_mul(max_len as u64));
    let mut out: Vec<PartitionShape> = (0..=cap)
        .flat_map(|n| partitions_of(n, max_width, max_len))
        .collect();
    out.sort();
    out
}

fn suffix_sums(it: impl DoubleEndedIterator<Item = u64>) -> Vec<u64> {
    let mut acc = 0;
    let mut v: Vec<u64> = it
        .rev()
        .map(|c| {
            acc += c;
            acc
        })
        .collect();
    v.reverse();
    v
}

impl PartitionShape {
    fn normalized(mut self) -> Self {
        while self.parts.last() == Some(&0) {
            self.parts.pop();
        }
        self
    }
}

fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// Parses `1,2,1` (surrounding brackets or parentheses and blanks tolerated).
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if t.trim().is_empty() {
        return Err(Error::Parse(format!("empty integer list: {s:?}")));
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad integer {x:?} in {s:?}: {e}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> RankedWeight {
        RankedWeight::new(c.to_vec()).unwrap()
    }

    fn p(c: &[u64]) -> PartitionShape {
        PartitionShape::new(c.to_vec()).unwrap()
    }

    fn ratios(v: &[i64]) -> Vec<Ratio<i64>> {
        v.iter().map(|&x| Ratio::from_integer(x)).collect()
    }

    #[test]
    fn matrices() {
        assert_eq!(cartan_matrix(1), vec![vec![2]]);
        assert_eq!(cartan_matrix(2), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(cartan_matrix(3), vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(min_matrix(1), vec![vec![1]]);
        assert_eq!(min_matrix(2), vec![vec![1, 1], vec![1, 2]]);
        assert_eq!(min_matrix(3)[1][2], 2);
    }

    #[test]
    fn cartan_inverse_examples() {
        assert_eq!(cartan_inverse_times(3, &[0, 0, 4]), ratios(&[1, 2, 3]));
        assert_eq!(cartan_inverse_times(1, &[2]), ratios(&[1]));
        assert_eq!(cartan_inverse_times(2, &[1, 1]), ratios(&[1, 1]));
        assert_eq!(cartan_inverse_nonneg_integral(3, &[1, 0, 0]), None);
        assert_eq!(cartan_inverse_nonneg_integral(3, &[0, 0, 4]), Some(vec![1, 2, 3]));
    }

    #[test]
    fn partitions_from_weights() {
        assert_eq!(weight_to_partition(&w(&[1, 2, 1])).unwrap(), p(&[4, 3, 1]));
        assert_eq!(weight_to_partition(&w(&[0, 0, 0])).unwrap(), PartitionShape::empty());
        assert_eq!(weight_to_partition(&w(&[0, 2, 0])).unwrap(), p(&[2, 2, 0]));
        assert!(matches!(weight_to_partition(&w(&[1, -1])), Err(Error::NotDominant(_))));
        let n = |c: &[u64]| RectangularSequence::new(c.to_vec()).unwrap();
        assert_eq!(nu_concat(&n(&[1, 0, 1])), p(&[2, 1, 1]));
        assert_eq!(nu_concat(&n(&[0, 0, 0])), PartitionShape::empty());
        assert_eq!(nu_concat(&n(&[1, 2, 1])), p(&[4, 3, 1]));
        assert_eq!(partition_to_weight(&p(&[4, 3, 1]), 3).unwrap(), w(&[1, 2, 1]));
        assert_eq!(partition_to_weight(&p(&[2, 2, 1, 1]), 3).unwrap(), w(&[0, 1, 0]));
    }

    #[test]
    fn padding() {
        assert_eq!(pad_partition(&w(&[1, 2, 1]), 0).unwrap(), p(&[4, 3, 1, 0]));
        assert_eq!(pad_partition(&w(&[0, 0, 0]), 1).unwrap(), p(&[1, 1, 1, 1]));
        assert_eq!(pad_partition(&w(&[0, 2, 0]), 1).unwrap(), p(&[3, 3, 1, 1]));
    }

    #[test]
    fn orders() {
        assert_eq!(order_compare(&p(&[2, 1, 1]), &p(&[2, 2, 0])), Ordering::Less);
        assert_eq!(order_compare(&p(&[4, 0, 0]), &p(&[4, 2, 2])), Ordering::Less);
        assert_eq!(order_compare(&p(&[3, 1]), &p(&[3, 1, 0])), Ordering::Equal);
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])));
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])));
        assert!(dominance_leq(&p(&[4, 3, 1, 0]), &p(&[4, 3, 1])));
        assert!(!dominance_leq(&p(&[2]), &p(&[3])));
    }

    #[test]
    fn translations() {
        let base = AffineWeightLabel::highest(w(&[1, 0]), 3);
        assert_eq!(affine_translate(&base, &[0, 0]), base);
        let t = affine_translate(&AffineWeightLabel::highest(w(&[0]), 1), &[1]);
        assert_eq!((t.finite, t.delta), (w(&[2]), 1));
        let t = affine_translate(&AffineWeightLabel::highest(w(&[0, 0]), 2), &[1, 1]);
        assert_eq!((t.finite, t.delta), (w(&[2, 2]), 2));
    }

    #[test]
    fn reflections() {
        assert_eq!(simple_reflection(&w(&[0, 5]), 1), w(&[0, 5]));
        assert_eq!(simple_reflection(&w(&[3]), 1), w(&[-3]));
        assert_eq!(simple_reflection(&w(&[1, 0]), 1), w(&[-1, 1]));
        assert_eq!(to_dominant(&w(&[-1, 1])), (w(&[1, 0]), true));
        assert_eq!(to_dominant(&w(&[-1, -1])), (w(&[1, 1]), true));
    }

    #[test]
    fn dimensions() {
        assert_eq!(weyl_dimension(&w(&[0, 0, 0])).unwrap(), BigInt::from(1));
        assert_eq!(weyl_dimension(&w(&[7])).unwrap(), BigInt::from(8));
        assert_eq!(weyl_dimension(&w(&[1, 1])).unwrap(), BigInt::from(8));
        assert_eq!(weyl_dimension(&w(&[1, 0, 1])).unwrap(), BigInt::from(15));
        assert_eq!(weyl_dimension(&w(&[0, 2, 0])).unwrap(), BigInt::from(20));
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(4, 4, 4).len(), 5);
        assert_eq!(partitions_of(4, 2, 4), vec![p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]);
        assert_eq!(partitions_of(0, 0, 0), vec![PartitionShape::empty()]);
        // 3 x 4 box: C(7,3) = 35 partitions.
        assert_eq!(partitions_in_box(3, 4, 12).len(), 35);
    }

    #[test]
    fn parsing() {
        assert_eq!("1,2,1".parse::<RankedWeight>().unwrap(), w(&[1, 2, 1]));
        assert_eq!("(0, -1)".parse::<RankedWeight>().unwrap(), w(&[0, -1]));
        assert!("1,x".parse::<RankedWeight>().is_err());
        assert!("".parse::<RankedWeight>().is_err());
        assert!("1,-2".parse::<RectangularSequence>().is_err());
        assert_eq!(p(&[4, 3, 1]).to_string(), "[4,3,1]");
        assert_eq!(p(&[2, 2]).display_padded(3), "[2,2,0]");
    }
}
