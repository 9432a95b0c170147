//! Syntactic normalization by induction on the top generator.
//!
//! The engine rewrites words using only the defining relations and the rules
//! derived from them; it never evaluates a permutation. With top generator
//! `T = x_t` and `t >= 2`:
//!
//! 1. Free-reduce, then replace every `T^2` by `x_{t-1} T x_{t-1}`.
//! 2. While `T` occurs at least twice, normalize the segment between the first
//!    two occurrences at level `t-1`, move the left `T` rightwards through the
//!    factors `y_1 .. y_{t-2}` (commuting past indices `<= t-3`, shifting past
//!    `x_{t-2}`), move the right `T` leftwards past the tail of `y_{t-1,j}`,
//!    and resolve the resulting collision. Each pass lowers the number of `T`
//!    letters, and `T^2` replacements only follow merges, so the loop ends.
//! 3. With at most one `T` left, normalize what follows it, move `T` right
//!    until it meets `y_{t-1,j}` (forming `y_{t,j}`), and normalize the prefix.
//!
//! Recursion is on `t`, so the whole procedure terminates.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::normal_form::{nf_letters, y_letters};
use crate::word::{push_reduced, Alphabet, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RewriteRule {
    /// `x^a x^b = x^(a+b mod 3)`.
    ExponentMerge,
    /// `x_{i+1}^2 = x_i x_{i+1} x_i`.
    TopSquare,
    /// `x_j x_i = x_i x_j` for `|i-j| >= 3`.
    Commute,
    /// `x_{i+2} x_i = x_i x_{i+1}^-1 x_{i+2}`, applied once per letter of `x_i^e`.
    Shift,
    /// `x_{i+1} x_i x_{i+1} = x_i^2`.
    SandwichCancel,
    /// `x_{i+1} x_i^2 x_{i+1} = x_i^2 x_{i+1} x_i^2`.
    SandwichSquare,
    /// `x_{i+2} x_{i+1} x_i x_{i+2} = x_{i+1}^2 x_i x_{i+2} x_{i+1}^2`.
    Collision,
    /// `x_3 x_2 x_1^2 x_3 = x_2 x_3 x_2 x_1^2`.
    SpecialCollision,
    /// A segment replaced by its normal form (justified by the nested steps).
    InnerNormalForm,
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RewriteRule::ExponentMerge => "exponent-merge",
            RewriteRule::TopSquare => "top-square",
            RewriteRule::Commute => "commute",
            RewriteRule::Shift => "shift",
            RewriteRule::SandwichCancel => "sandwich-cancel",
            RewriteRule::SandwichSquare => "sandwich-square",
            RewriteRule::Collision => "collision",
            RewriteRule::SpecialCollision => "special-collision",
            RewriteRule::InnerNormalForm => "inner-normal-form",
        })
    }
}

/// One local replacement `before -> after` applied by the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: RewriteRule,
    pub before: Word,
    pub after: Word,
}

pub(crate) fn normalize(w: &Word, n: usize, trace: Option<&mut Vec<RewriteStep>>) -> Result<Vec<usize>> {
    if w.alphabet() != Alphabet::Local && !w.is_empty() {
        return Err(Error::WrongAlphabet { expected: "local" });
    }
    if n < 3 {
        return Err(Error::InvalidDegree(n, 3));
    }
    if let Some(l) = w.letters().iter().find(|l| l.index < 1 || l.index > n - 2) {
        return Err(Error::IndexOutOfRange { index: l.index, max: n - 2 });
    }
    let mut engine = Engine { trace };
    engine.normalize(w.letters().to_vec(), n - 2)
}

struct Engine<'a> {
    trace: Option<&'a mut Vec<RewriteStep>>,
}

fn local(letters: &[Letter]) -> Word {
    Word::new(Alphabet::Local, letters.to_vec())
}

impl Engine<'_> {
    fn note(&mut self, rule: RewriteRule, before: &[Letter], after: &[Letter]) {
        if let Some(trace) = self.trace.as_deref_mut() {
            trace.push(RewriteStep { rule, before: local(before), after: local(after) });
        }
    }

    fn reduce(&mut self, w: &[Letter]) -> Vec<Letter> {
        if self.trace.is_none() {
            return crate::word::reduce_letters(w);
        }
        let mut out: Vec<Letter> = Vec::with_capacity(w.len());
        for &l in w {
            if let Some(&last) = out.last() {
                if last.index == l.index {
                    push_reduced(&mut out, l);
                    let after: &[Letter] = match out.last() {
                        Some(m) if m.index == l.index => core::slice::from_ref(m),
                        _ => &[],
                    };
                    let after = after.to_vec();
                    self.note(RewriteRule::ExponentMerge, &[last, l], &after);
                    continue;
                }
            }
            out.push(l);
        }
        out
    }

    /// Returns `(k_1, ..., k_top)` for a word in `x_1 .. x_top`.
    fn normalize(&mut self, w: Vec<Letter>, top: usize) -> Result<Vec<usize>> {
        if top == 1 {
            let r = self.reduce(&w);
            let k = match r.as_slice() {
                [] => 2,
                [l] if l.exponent == 1 => 1,
                [_] => 0,
                _ => return Err(Error::Defect(alloc::format!("{} did not reduce to a power of x1", local(&r)))),
            };
            return Ok(alloc::vec![k]);
        }
        let t = top;
        let mut w = w;
        loop {
            w = self.reduce(&w);
            if let Some(pos) = w.iter().position(|l| l.index == t && l.exponent == 2) {
                let rep = [Letter::gen(t - 1), Letter::gen(t), Letter::gen(t - 1)];
                self.note(RewriteRule::TopSquare, &w[pos..=pos], &rep);
                w.splice(pos..=pos, rep);
                continue;
            }
            let mut tops = w.iter().enumerate().filter(|(_, l)| l.index == t).map(|(i, _)| i);
            let (Some(a), Some(b)) = (tops.next(), tops.next()) else {
                break;
            };
            let inner = w[a + 1..b].to_vec();
            let ks = self.normalize(inner.clone(), t - 1)?;
            let nf = nf_letters(&ks);
            self.note(RewriteRule::InnerNormalForm, &inner, &nf);

            let mut seg = Vec::with_capacity(nf.len() + 8);
            self.shift_right(t, &nf_letters(&ks[..t - 2]), &mut seg)?;
            let mut last = Vec::new();
            y_letters(t - 1, ks[t - 2], &mut last);
            seg.extend(self.collide(t, &last)?);
            w.splice(a..=b, seg);
        }

        let mut tops = w.iter().enumerate().filter(|(_, l)| l.index == t).map(|(i, _)| i);
        match tops.next() {
            None => {
                let mut ks = self.normalize(w, t - 1)?;
                ks.push(t + 1);
                Ok(ks)
            }
            Some(a) => {
                let after = w[a + 1..].to_vec();
                let ks2 = self.normalize(after.clone(), t - 1)?;
                let nf = nf_letters(&ks2);
                self.note(RewriteRule::InnerNormalForm, &after, &nf);
                let mut left = w[..a].to_vec();
                self.shift_right(t, &nf_letters(&ks2[..t - 2]), &mut left)?;
                // T y_{t-1,j} is y_{t,j}
                let j = ks2[t - 2];
                let mut ks = self.normalize(left, t - 1)?;
                ks.push(j);
                Ok(ks)
            }
        }
    }

    /// Moves `T = x_t` from the left of `head` to its right, appending the
    /// rewritten `head` to `out`. `head` only uses indices `<= t-2`.
    fn shift_right(&mut self, t: usize, head: &[Letter], out: &mut Vec<Letter>) -> Result<()> {
        let top = Letter::gen(t);
        for &l in head {
            if l.index + 3 <= t {
                self.note(RewriteRule::Commute, &[top, l], &[l, top]);
                out.push(l);
            } else if l.index + 2 == t {
                let x = Letter::gen(l.index);
                let mid = Letter::inv(t - 1);
                let after: &[Letter] =
                    if l.exponent == 1 { &[x, mid, top] } else { &[x, mid, x, mid, top] };
                self.note(RewriteRule::Shift, &[top, l], after);
                out.extend_from_slice(&after[..after.len() - 1]);
            } else {
                return Err(Error::Defect(alloc::format!("x{} cannot pass x{}", t, l.index)));
            }
        }
        Ok(())
    }

    /// Rewrites `T last T`, where `last = y_{t-1,j}`, into a word with fewer `T`s.
    fn collide(&mut self, t: usize, last: &[Letter]) -> Result<Vec<Letter>> {
        let top = Letter::gen(t);
        if last.is_empty() {
            self.note(RewriteRule::ExponentMerge, &[top, top], &[Letter::inv(t)]);
            return Ok(alloc::vec![Letter::inv(t)]);
        }
        let core_len = if last.len() >= 2 && last[1].index + 2 == t { 2 } else { 1 };
        let (core, tail) = last.split_at(core_len);
        for &l in tail.iter().rev() {
            if l.index + 3 > t {
                return Err(Error::Defect(alloc::format!("x{} cannot pass x{}", t, l.index)));
            }
            self.note(RewriteRule::Commute, &[l, top], &[top, l]);
        }
        let below = Letter::gen(t - 1);
        let mut before = alloc::vec![top];
        before.extend_from_slice(core);
        before.push(top);
        let (rule, after): (RewriteRule, Vec<Letter>) = match core {
            [a] if a.index + 1 == t && a.exponent == 1 => (RewriteRule::SandwichCancel, alloc::vec![Letter::inv(t - 1)]),
            [a] if a.index + 1 == t => {
                (RewriteRule::SandwichSquare, alloc::vec![Letter::inv(t - 1), top, Letter::inv(t - 1)])
            }
            [a, b] if a.index + 1 == t && a.exponent == 1 && b.exponent == 1 => (
                RewriteRule::Collision,
                alloc::vec![Letter::inv(t - 1), *b, top, Letter::inv(t - 1)],
            ),
            [a, b] if t == 3 && a.index == 2 && a.exponent == 1 && b.exponent == 2 => {
                (RewriteRule::SpecialCollision, alloc::vec![below, top, below, *b])
            }
            _ => {
                return Err(Error::Defect(alloc::format!("unexpected collision {}", local(&before))));
            }
        };
        self.note(rule, &before, &after);
        let mut out = after;
        out.extend_from_slice(tail);
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_form::{nf_evaluate, nf_to_word, normalize_word, normalize_word_traced, NormalFormTuple};
    use alloc::vec;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn tuple(n: usize, k: &[usize]) -> NormalFormTuple {
        NormalFormTuple::new(n, k.to_vec()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let t = normalize_word(&w("x2^2"), 4).unwrap();
        assert_eq!(t, tuple(4, &[1, 1]));
        assert_eq!(alloc::format!("{}", nf_to_word(&t)), "x1 x2 x1");
        assert_eq!(normalize_word(&w("x1^3"), 5).unwrap(), tuple(5, &[2, 3, 4]));
        assert_eq!(normalize_word(&w("x3 x1"), 5).unwrap(), tuple(5, &[0, 1, 3]));
        assert_eq!(normalize_word(&w("x1 x2^-1 x3"), 5).unwrap(), tuple(5, &[0, 1, 3]));
        assert_eq!(normalize_word(&w("e"), 3).unwrap(), tuple(3, &[2]));
        assert_eq!(normalize_word(&w("x1 x1"), 3).unwrap(), tuple(3, &[0]));
    }

    #[test]
    fn normalize_rejects_bad_input() {
        assert_eq!(normalize_word(&w("x4"), 5), Err(Error::IndexOutOfRange { index: 4, max: 3 }));
        assert_eq!(normalize_word(&w("v1"), 5), Err(Error::WrongAlphabet { expected: "local" }));
        assert_eq!(normalize_word(&w("e"), 2), Err(Error::InvalidDegree(2, 3)));
    }

    #[test]
    fn special_collision_is_exercised() {
        // x3 x2 x1^2 x3 at n = 5 runs into the degree-specific collision
        let (t, trace) = normalize_word_traced(&w("x3 x2 x1^2 x3"), 5).unwrap();
        assert!(trace.iter().any(|s| s.rule == RewriteRule::SpecialCollision));
        assert_eq!(nf_evaluate(&t), w("x3 x2 x1^2 x3").evaluate(5).unwrap());
    }

    #[test]
    fn every_rule_fires_somewhere() {
        use std::collections::HashSet;
        let mut fired = HashSet::new();
        let samples = [
            ("x3 x2 x1^2 x3", 5),
            ("x3 x2 x1 x3", 5),
            ("x2 x1^2 x2", 4),
            ("x2 x1 x2", 4),
            ("x4 x1 x2 x3 x4^2 x1", 6),
            ("x5 x3 x4 x2 x5 x1 x5", 7),
            ("x2 x2 x1", 4),
        ];
        for (s, n) in samples {
            let (t, trace) = normalize_word_traced(&w(s), n).unwrap();
            assert_eq!(nf_evaluate(&t), w(s).evaluate(n).unwrap(), "{s}");
            fired.extend(trace.iter().map(|s| s.rule));
        }
        for rule in [
            RewriteRule::ExponentMerge,
            RewriteRule::TopSquare,
            RewriteRule::Commute,
            RewriteRule::Shift,
            RewriteRule::SandwichCancel,
            RewriteRule::SandwichSquare,
            RewriteRule::Collision,
            RewriteRule::SpecialCollision,
            RewriteRule::InnerNormalForm,
        ] {
            assert!(fired.contains(&rule), "{rule:?} never fired");
        }
    }

    #[test]
    fn canonical_words_are_fixed_points_exhaustively() {
        for n in 3..=7 {
            for (t, _) in crate::normal_form::enumerate(n).unwrap() {
                assert_eq!(normalize_word(&nf_to_word(&t), n).unwrap(), t);
            }
        }
    }

    fn arb_case() -> impl Strategy<Value = (Word, usize)> {
        (3usize..=9).prop_flat_map(|n| {
            (prop::collection::vec((1..=n - 2, 1i64..=2), 0..40).prop_map(|v| Word::local(&v)), Just(n))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(600))]

        /// Each individual rewrite is an identity in A_n, so the whole
        /// derivation is sound step by step, not only at the end.
        #[test]
        fn every_traced_step_is_sound((word, n) in arb_case()) {
            let (t, trace) = normalize_word_traced(&word, n).unwrap();
            for step in &trace {
                prop_assert_eq!(
                    step.before.evaluate(n).unwrap(),
                    step.after.evaluate(n).unwrap(),
                    "{:?}: {} -> {}", step.rule, step.before, step.after
                );
            }
            prop_assert_eq!(nf_evaluate(&t), word.evaluate(n).unwrap());
            prop_assert_eq!(normalize_word(&word, n).unwrap(), t);
        }
    }

    #[test]
    fn empty_trace_for_identity() {
        let (t, trace) = normalize_word_traced(&w("e"), 6).unwrap();
        assert_eq!(t.coords(), &vec![2, 3, 4, 5][..]);
        assert!(trace.iter().all(|s| s.rule == RewriteRule::InnerNormalForm || s.before.is_empty()));
    }
}
