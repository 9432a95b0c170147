//! Canonical coordinates `(k_1, ..., k_{n-2})` of elements of `A_n`.
//!
//! The element with coordinates `k` is the product
//! `y_{1,k_1} y_{2,k_2} ... y_{n-2,k_{n-2}}`, where
//!
//! ```text
//! y_{m,0}   = x_m x_{m-1} ... x_2 x_1^2
//! y_{m,k}   = x_m x_{m-1} ... x_k        (1 <= k <= m)
//! y_{m,m+1} = e
//! ```
//!
//! Coordinate `k_j` ranges over `0..=j+1`, so there are `3 * 4 * ... * n = n!/2`
//! tuples, one for each even permutation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::error::{parse_err, Error, Result};
use crate::perm::Permutation;
use crate::report::{Payload, VerificationReport, Witness};
use crate::rewrite::{self, RewriteStep};
use crate::word::{Alphabet, Letter, Word};

/// Largest degree whose group order fits in a `u128` rank.
pub const MAX_RANK_DEGREE: usize = 34;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalFormTuple {
    n: usize,
    k: Vec<usize>,
}

impl NormalFormTuple {
    pub fn new(n: usize, k: Vec<usize>) -> Result<NormalFormTuple> {
        if n < 3 {
            return Err(Error::InvalidDegree(n, 3));
        }
        if k.len() != n - 2 {
            return Err(Error::TupleLength { n, got: k.len(), expected: n - 2 });
        }
        for (idx, &value) in k.iter().enumerate() {
            let j = idx + 1;
            if value > j + 1 {
                return Err(Error::TupleOutOfRange { j, value, max: j + 1 });
            }
        }
        Ok(NormalFormTuple { n, k })
    }

    pub(crate) fn new_unchecked(n: usize, k: Vec<usize>) -> NormalFormTuple {
        debug_assert!(NormalFormTuple::new(n, k.clone()).is_ok());
        NormalFormTuple { n, k }
    }

    /// Coordinates of the identity: every factor empty.
    pub fn identity(n: usize) -> Result<NormalFormTuple> {
        if n < 3 {
            return Err(Error::InvalidDegree(n, 3));
        }
        Ok(NormalFormTuple { n, k: (1..=n - 2).map(|j| j + 1).collect() })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[usize] {
        &self.k
    }

    /// `k_j`, 1-based.
    pub fn get(&self, j: usize) -> usize {
        self.k[j - 1]
    }

    /// Parses `"k1,k2,...,k(n-2)"`; the degree is the coordinate count plus two.
    pub fn parse(text: &str) -> Result<NormalFormTuple> {
        let mut k = Vec::new();
        let mut offset = 0;
        for part in text.split(',') {
            let trimmed = part.trim();
            let lead = part.len() - part.trim_start().len();
            if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err(offset + lead, "expected a non-negative integer"));
            }
            let v = trimmed.parse::<usize>().map_err(|_| parse_err(offset + lead, "number too large"))?;
            let j = k.len() + 1;
            if v > j + 1 {
                return Err(parse_err(offset + lead, alloc::format!("k_{j} = {v} exceeds {}", j + 1)));
            }
            k.push(v);
            offset += part.len() + 1;
        }
        let n = k.len() + 2;
        NormalFormTuple::new(n, k)
    }
}

impl fmt::Display for NormalFormTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.k.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NormalFormTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self}; n={})", self.n)
    }
}

pub(crate) fn y_letters(m: usize, k: usize, out: &mut Vec<Letter>) {
    if k == m + 1 {
        return;
    }
    let low = k.max(1);
    for i in (low..=m).rev() {
        out.push(Letter::gen(i));
    }
    if k == 0 {
        // x_m ... x_2 then x_1^2
        out.pop();
        out.push(Letter::inv(1));
    }
}

/// The factor `y_{m,k}`.
pub fn y_word(m: usize, k: usize) -> Result<Word> {
    if m < 1 {
        return Err(Error::IndexOutOfRange { index: m, max: usize::MAX });
    }
    if k > m + 1 {
        return Err(Error::TupleOutOfRange { j: m, value: k, max: m + 1 });
    }
    let mut letters = Vec::with_capacity(m + 1);
    y_letters(m, k, &mut letters);
    Ok(Word::new(Alphabet::Local, letters))
}

pub(crate) fn nf_letters(k: &[usize]) -> Vec<Letter> {
    let mut out = Vec::new();
    for (idx, &kj) in k.iter().enumerate() {
        y_letters(idx + 1, kj, &mut out);
    }
    out
}

/// The canonical word `y_{1,k_1} ... y_{n-2,k_{n-2}}`.
pub fn nf_to_word(t: &NormalFormTuple) -> Word {
    Word::new(Alphabet::Local, crate::word::reduce_letters(&nf_letters(&t.k)))
}

pub fn nf_evaluate(t: &NormalFormTuple) -> Permutation {
    let mut p = Permutation::identity_unchecked(t.n);
    for l in nf_letters(&t.k) {
        p.right_mul_three_cycle(l.index, l.exponent);
    }
    p
}

/// Brings `w` to normal form using only the defining relations and rules
/// derived from them. Never evaluates permutations.
pub fn normalize_word(w: &Word, n: usize) -> Result<NormalFormTuple> {
    let k = rewrite::normalize(w, n, None)?;
    Ok(NormalFormTuple::new_unchecked(n, k))
}

/// Like [`normalize_word`], also returning every local rewrite that was applied.
pub fn normalize_word_traced(w: &Word, n: usize) -> Result<(NormalFormTuple, Vec<RewriteStep>)> {
    let mut trace = Vec::new();
    let k = rewrite::normalize(w, n, Some(&mut trace))?;
    Ok((NormalFormTuple::new_unchecked(n, k), trace))
}

/// Decodes an even permutation by peeling off `y_{m,k_m}` from the top level down.
pub fn encode_perm(p: &Permutation) -> Result<NormalFormTuple> {
    let n = p.degree();
    if n < 3 {
        return Err(Error::InvalidDegree(n, 3));
    }
    if !p.is_even() {
        return Err(Error::OddPermutation);
    }
    let mut rest = p.clone();
    let mut k = vec![0usize; n - 2];
    let mut factor = Vec::with_capacity(n);
    for m in (1..=n - 2).rev() {
        let top = m + 2;
        let q = rest.raw().iter().position(|&v| v as usize + 1 == top).map(|i| i + 1).unwrap_or(0);
        let km = match q {
            q if q == top => m + 1,
            1 => 0,
            q if (2..top).contains(&q) => q - 1,
            _ => return Err(Error::Defect(alloc::format!("point {top} has preimage {q} at level {m}"))),
        };
        k[m - 1] = km;
        factor.clear();
        y_letters(m, km, &mut factor);
        // rest = rest * y^-1
        for l in factor.iter().rev() {
            rest.right_mul_three_cycle(l.index, 3 - l.exponent);
        }
    }
    if !rest.is_identity() {
        return Err(Error::Defect(alloc::format!("peeling {p} left {rest}")));
    }
    Ok(NormalFormTuple::new_unchecked(n, k))
}

/// `n!/2`, the number of tuples of degree `n`.
pub fn group_order(n: usize) -> Result<u128> {
    if n < 3 {
        return Err(Error::InvalidDegree(n, 3));
    }
    (3..=n as u128).try_fold(1u128, |acc, r| acc.checked_mul(r)).ok_or(Error::RankOverflow(n))
}

/// Little-endian mixed-radix rank: `k_j` has place value `3 * 4 * ... * (j+1)`.
pub fn rank(t: &NormalFormTuple) -> Result<u128> {
    if t.n > MAX_RANK_DEGREE {
        return Err(Error::RankOverflow(t.n));
    }
    let mut r = 0u128;
    let mut weight = 1u128;
    for (idx, &kj) in t.k.iter().enumerate() {
        r += kj as u128 * weight;
        weight *= idx as u128 + 3;
    }
    Ok(r)
}

pub fn unrank(n: usize, r: u128) -> Result<NormalFormTuple> {
    let order = group_order(n)?;
    if r >= order {
        return Err(Error::RankOutOfRange { rank: r, order });
    }
    let mut rest = r;
    let k = (1..=n - 2)
        .map(|j| {
            let radix = j as u128 + 2;
            let digit = rest % radix;
            rest /= radix;
            digit as usize
        })
        .collect();
    Ok(NormalFormTuple::new_unchecked(n, k))
}

/// All `n!/2` tuples in rank order, each with its permutation.
pub fn enumerate(n: usize) -> Result<Enumeration> {
    let order = group_order(n)?;
    enumerate_range(n, 0..order)
}

/// The tuples with rank in `ranks`, in rank order.
pub fn enumerate_range(n: usize, ranks: Range<u128>) -> Result<Enumeration> {
    let order = group_order(n)?;
    if ranks.end > order || ranks.start > ranks.end {
        return Err(Error::RankOutOfRange { rank: ranks.end, order });
    }
    let first = if ranks.start < order { Some(unrank(n, ranks.start)?.k) } else { None };
    Ok(Enumeration { n, next: first, remaining: ranks.end - ranks.start, rank: ranks.start })
}

pub struct Enumeration {
    n: usize,
    next: Option<Vec<usize>>,
    remaining: u128,
    rank: u128,
}

impl Enumeration {
    /// Rank of the next item to be yielded.
    pub fn next_rank(&self) -> u128 {
        self.rank
    }
}

impl Iterator for Enumeration {
    type Item = (NormalFormTuple, Permutation);

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == 0 {
            return None;
        }
        let k = self.next.take()?;
        self.remaining -= 1;
        self.rank += 1;
        let t = NormalFormTuple::new_unchecked(self.n, k);
        let p = nf_evaluate(&t);
        if self.remaining > 0 {
            let mut succ = t.k.clone();
            for (idx, digit) in succ.iter_mut().enumerate() {
                if *digit < idx + 2 {
                    *digit += 1;
                    break;
                }
                *digit = 0;
            }
            self.next = Some(succ);
        }
        Some((t, p))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining).unwrap_or(usize::MAX);
        (r, usize::try_from(self.remaining).ok())
    }
}

/// Exhaustive sweep over every tuple of degree `n` (3 ≤ n ≤ 10): the
/// evaluations are pairwise distinct even permutations, `encode_perm` inverts
/// them, the letter-count bounds hold, and the top coordinate selects the coset
/// of the point stabilizer of `n`.
pub fn check_bijectivity(n: usize) -> Result<VerificationReport> {
    if !(3..=10).contains(&n) {
        return Err(Error::UnsupportedDegree { n, lo: 3, hi: 10 });
    }
    let mut report = VerificationReport::new("bijectivity", n);
    let order = group_order(n)? as usize;
    let total: usize = (1..=n).product();
    let mut seen = vec![0u64; total.div_ceil(64)];
    let mut elements = 0usize;
    let mut per_top = vec![0usize; n];
    for (t, p) in enumerate(n)? {
        elements += 1;
        if !p.is_even() {
            report.fail(Payload::new("odd evaluation").with("tuple", Witness::Tuple(t.clone())));
        }
        let idx = p.lex_index() as usize;
        if seen[idx / 64] & (1 << (idx % 64)) != 0 {
            report.fail(Payload::new("repeated permutation").with("tuple", Witness::Tuple(t.clone())));
        }
        seen[idx / 64] |= 1 << (idx % 64);
        match encode_perm(&p) {
            Ok(back) if back == t => {}
            _ => report.fail(
                Payload::new("encode_perm does not invert nf_evaluate")
                    .with("tuple", Witness::Tuple(t.clone()))
                    .with("permutation", Witness::Permutation(p.clone())),
            ),
        }
        let word = nf_to_word(&t);
        for k in 2..=n - 1 {
            if word.occurrences(n - k) > k - 1 {
                report.fail(
                    Payload::new(alloc::format!("x{} occurs more than {} times", n - k, k - 1))
                        .with("word", Witness::Word(word.clone())),
                );
            }
        }
        let top = t.get(n - 2);
        per_top[top] += 1;
        if p.fixes(n) != (top == n - 1) {
            report.fail(Payload::new("fixes n iff k_{n-2} = n-1 violated").with("tuple", Witness::Tuple(t.clone())));
        }
    }
    let coset_size = order / n;
    if elements != order {
        report.fail(Payload::new(alloc::format!("enumerated {elements} elements, expected {order}")));
    }
    if per_top.iter().any(|&c| c != coset_size) {
        report.fail(Payload::new(alloc::format!("top-coordinate classes are not all of size {coset_size}")));
    }
    report.stat("elements", elements);
    report.stat("expected", order);
    report.stat("coset_size", coset_size);
    Ok(report)
}
