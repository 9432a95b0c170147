//! The classical generators `v_i = (i, n-1, n)` and conversion to and from
//! the local generators.
//!
//! ```text
//! v_i = x_{n-2} ... x_{i+1} x_i x_{i+1}^-1 ... x_{n-2}^-1
//! x_i = v_{n-2}^-1 ... v_{i+1}^-1 v_i v_{i+1} ... v_{n-2}
//! ```

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::report::{Payload, VerificationReport, Witness};
use crate::word::{push_reduced, Alphabet, Letter, Word};

/// Carmichael generators of a fixed degree `n >= 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CarmichaelContext {
    n: usize,
}

impl CarmichaelContext {
    pub fn new(n: usize) -> Result<CarmichaelContext> {
        if n < 4 {
            return Err(Error::InvalidDegree(n, 4));
        }
        Ok(CarmichaelContext { n })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < 1 || i > self.n - 2 {
            return Err(Error::IndexOutOfRange { index: i, max: self.n - 2 });
        }
        Ok(())
    }

    /// `x_{n-2} ... x_{i+1} x_i x_{i+1}^-1 ... x_{n-2}^-1`.
    pub fn v_definition(&self, i: usize) -> Result<Word> {
        self.check_index(i)?;
        Ok(Word::new(Alphabet::Local, conjugate_letters(i, self.n - 2, false)))
    }

    /// `v_{n-2}^-1 ... v_{i+1}^-1 v_i v_{i+1} ... v_{n-2}`.
    pub fn x_definition(&self, i: usize) -> Result<Word> {
        self.check_index(i)?;
        Ok(Word::new(Alphabet::Carmichael, conjugate_letters(i, self.n - 2, true)))
    }

    pub fn v_perm(&self, i: usize) -> Result<Permutation> {
        self.v_definition(i)?.evaluate(self.n)
    }

    pub fn x_to_v(&self, w: &Word) -> Result<Word> {
        self.substitute(w, Alphabet::Local, |i| self.x_definition(i))
    }

    pub fn v_to_x(&self, w: &Word) -> Result<Word> {
        self.substitute(w, Alphabet::Carmichael, |i| self.v_definition(i))
    }

    fn substitute(&self, w: &Word, from: Alphabet, image: impl Fn(usize) -> Result<Word>) -> Result<Word> {
        let to = match from {
            Alphabet::Local => Alphabet::Carmichael,
            Alphabet::Carmichael => Alphabet::Local,
        };
        if w.is_empty() {
            return Ok(Word::empty(to));
        }
        if w.alphabet() != from {
            return Err(Error::WrongAlphabet { expected: from.name() });
        }
        let mut out: Vec<Letter> = Vec::new();
        for l in w.letters() {
            let sub = image(l.index)?;
            // the inverse of a conjugate only inverts its middle letter
            let sub = if l.exponent == 2 { sub.inverse() } else { sub };
            for &m in sub.letters() {
                push_reduced(&mut out, m);
            }
        }
        Ok(Word::new(to, out))
    }

    /// `v_i^3 = 1` for every `i` and `(v_i v_j)^2 = 1` for every ordered pair `i != j`.
    pub fn check(&self) -> Result<VerificationReport> {
        let n = self.n;
        let mut report = VerificationReport::new("carmichael", n);
        let vs: Vec<Permutation> = (1..=n - 2).map(|i| self.v_perm(i)).collect::<Result<_>>()?;
        let mut cubes = 0usize;
        let mut pairs = 0usize;
        for (a, v) in vs.iter().enumerate() {
            cubes += 1;
            if !v.pow(3).is_identity() {
                report.fail(
                    Payload::new(alloc::format!("v{}^3 != 1", a + 1)).with("v", Witness::Permutation(v.clone())),
                );
            }
            if v.apply(a + 1) != n - 1 || v.apply(n - 1) != n || v.apply(n) != a + 1 {
                report.fail(Payload::new(alloc::format!("v{} is not ({}, {}, {})", a + 1, a + 1, n - 1, n)));
            }
        }
        for (a, u) in vs.iter().enumerate() {
            for (b, v) in vs.iter().enumerate() {
                if a == b {
                    continue;
                }
                pairs += 1;
                if !u.compose_unchecked(v).pow(2).is_identity() {
                    report.fail(Payload::new(alloc::format!("(v{} v{})^2 != 1", a + 1, b + 1)));
                }
            }
        }
        // the product form and the conjugate form of v_i agree
        for i in 1..=n - 2 {
            let mut product = Permutation::identity_unchecked(n);
            let mut tail = Permutation::identity_unchecked(n);
            for k in i..=n - 2 {
                product.right_mul_three_cycle(k, 2);
            }
            for k in i + 1..=n - 2 {
                tail.right_mul_three_cycle(k, 2);
            }
            let product_form = product.inverse().compose_unchecked(&tail);
            if product_form != vs[i - 1] {
                report.fail(Payload::new(alloc::format!("product and conjugate forms of v{i} differ")));
            }
        }
        report.stat("cube_checks", cubes);
        report.stat("pair_checks", pairs);
        Ok(report)
    }
}

/// `c_top ... c_{i+1} c_i c_{i+1}^-1 ... c_top^-1`; with `inverse_left` the
/// left flank is inverted instead of the right one.
fn conjugate_letters(i: usize, top: usize, inverse_left: bool) -> Vec<Letter> {
    let (left, right) = if inverse_left { (2, 1) } else { (1, 2) };
    let mut out = Vec::with_capacity(2 * (top - i) + 1);
    for k in (i + 1..=top).rev() {
        out.push(Letter { index: k, exponent: left });
    }
    out.push(Letter::gen(i));
    for k in i + 1..=top {
        out.push(Letter { index: k, exponent: right });
    }
    out
}

/// The permutation of `v_i` at degree `n`, computed from its defining word.
pub fn v_perm(i: usize, n: usize) -> Result<Permutation> {
    if n < 3 {
        return Err(Error::InvalidDegree(n, 3));
    }
    if i < 1 || i > n - 2 {
        return Err(Error::IndexOutOfRange { index: i, max: n - 2 });
    }
    let mut p = Permutation::identity_unchecked(n);
    for l in conjugate_letters(i, n - 2, false) {
        p.right_mul_three_cycle(l.index, l.exponent);
    }
    Ok(p)
}

pub fn x_to_v(w: &Word, n: usize) -> Result<Word> {
    CarmichaelContext::new(n)?.x_to_v(w)
}

pub fn v_to_x(w: &Word, n: usize) -> Result<Word> {
    CarmichaelContext::new(n)?.v_to_x(w)
}

pub fn check_carmichael(n: usize) -> Result<VerificationReport> {
    CarmichaelContext::new(n)?.check()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal_form::normalize_word;
    use crate::presentation::closure_order;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn v_perm_examples() {
        for n in 3..=9 {
            assert_eq!(v_perm(n - 2, n).unwrap(), Permutation::three_cycle(n - 2, n).unwrap());
        }
        assert_eq!(v_perm(1, 5).unwrap().images(), alloc::vec![4, 2, 3, 5, 1]);
        assert_eq!(v_perm(2, 6).unwrap(), Permutation::parse("(2 5 6)", 6).unwrap());
        assert_eq!(
            v_perm(1, 5).unwrap(),
            w("x3 x2 x1 x2^-1 x3^-1").evaluate(5).unwrap()
        );
        assert!(v_perm(4, 5).is_err());
    }

    #[test]
    fn v_perm_is_the_expected_three_cycle() {
        for n in 3..=12 {
            for i in 1..=n - 2 {
                let expected = Permutation::cycle(&[i, n - 1, n], n).unwrap();
                assert_eq!(v_perm(i, n).unwrap(), expected, "i={i} n={n}");
            }
        }
    }

    #[test]
    fn conversion_examples() {
        assert_eq!(x_to_v(&w("x2"), 4).unwrap().to_string(), "v2");
        assert_eq!(x_to_v(&w("x1"), 4).unwrap().to_string(), "v2^2 v1 v2");
        assert_eq!(x_to_v(&w("e"), 4).unwrap().to_string(), "e");
        assert_eq!(v_to_x(&w("v2"), 4).unwrap().to_string(), "x2");
        assert_eq!(v_to_x(&w("v1"), 4).unwrap().to_string(), "x2 x1 x2^2");
        assert_eq!(x_to_v(&w("x1^2"), 4).unwrap().to_string(), "v2^2 v1^2 v2");
        assert!(x_to_v(&w("v1"), 4).is_err());
        assert!(x_to_v(&w("x3"), 4).is_err());
        assert!(x_to_v(&w("x1"), 3).is_err());
    }

    #[test]
    fn x_images_are_recovered() {
        for n in 4..=10 {
            for i in 1..=n - 2 {
                let v_word = x_to_v(&Word::local(&[(i, 1)]), n).unwrap();
                assert_eq!(v_word.evaluate(n).unwrap(), Permutation::three_cycle(i, n).unwrap());
            }
        }
    }

    #[test]
    fn carmichael_relations() {
        let r = check_carmichael(5).unwrap();
        assert!(r.passed);
        assert_eq!(r.count("cube_checks"), Some(3));
        assert_eq!(r.count("pair_checks"), Some(6));
        let r = check_carmichael(4).unwrap();
        assert!(r.passed);
        assert_eq!((r.count("cube_checks"), r.count("pair_checks")), (Some(2), Some(2)));
        assert!(check_carmichael(32).unwrap().passed);
        assert!(check_carmichael(3).is_err());
    }

    #[test]
    fn v_images_generate_alternating_group() {
        for n in 4..=8 {
            let vs: Vec<_> = (1..=n - 2).map(|i| v_perm(i, n).unwrap()).collect();
            let expected: usize = (3..=n).product();
            assert_eq!(closure_order(&vs, n), expected);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn roundtrip_preserves_normal_form(
            (word, n) in (4usize..=8).prop_flat_map(|n| {
                (prop::collection::vec((1..=n - 2, 1i64..=2), 0..30).prop_map(|v| Word::local(&v)), Just(n))
            })
        ) {
            let v = x_to_v(&word, n).unwrap();
            prop_assert_eq!(v.evaluate(n).unwrap(), word.evaluate(n).unwrap());
            let back = v_to_x(&v, n).unwrap();
            prop_assert_eq!(normalize_word(&back, n).unwrap(), normalize_word(&word, n).unwrap());
        }
    }
}
