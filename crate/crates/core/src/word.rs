//! Words over the generator alphabets `x_i` (local) and `v_i` (Carmichael).
//!
//! Every generator has order 3, so exponents are kept canonical in `{1, 2}`;
//! `x^2` doubles as `x^-1`.

use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::carmichael;
use crate::error::{parse_err, Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    /// `x_i = (i, i+1, i+2)`.
    Local,
    /// `v_i = (i, n-1, n)`.
    Carmichael,
}

impl Alphabet {
    pub fn prefix(self) -> char {
        match self {
            Alphabet::Local => 'x',
            Alphabet::Carmichael => 'v',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Alphabet::Local => "local",
            Alphabet::Carmichael => "carmichael",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: usize,
    /// Always 1 or 2.
    pub exponent: u8,
}

impl Letter {
    /// Reduces `exponent` mod 3; `None` when the letter vanishes.
    pub fn new(index: usize, exponent: i64) -> Option<Letter> {
        let e = exponent.rem_euclid(3) as u8;
        (e != 0).then_some(Letter { index, exponent: e })
    }

    pub const fn gen(index: usize) -> Letter {
        Letter { index, exponent: 1 }
    }

    pub const fn inv(index: usize) -> Letter {
        Letter { index, exponent: 2 }
    }

    pub fn inverse(self) -> Letter {
        Letter { index: self.index, exponent: 3 - self.exponent }
    }
}

/// A finite word over one alphabet. Carries no degree.
#[derive(Clone)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

// The empty word is the same element in either alphabet.
impl PartialEq for Word {
    fn eq(&self, other: &Word) -> bool {
        self.letters == other.letters && (self.letters.is_empty() || self.alphabet == other.alphabet)
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        if !self.letters.is_empty() {
            self.alphabet.hash(state);
        }
        self.letters.hash(state);
    }
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Word {
        Word { alphabet, letters }
    }

    pub fn empty(alphabet: Alphabet) -> Word {
        Word { alphabet, letters: Vec::new() }
    }

    /// Local word from `(index, exponent)` pairs; exponents are taken mod 3.
    pub fn local(pairs: &[(usize, i64)]) -> Word {
        Self::from_pairs(Alphabet::Local, pairs)
    }

    pub fn from_pairs(alphabet: Alphabet, pairs: &[(usize, i64)]) -> Word {
        Word { alphabet, letters: pairs.iter().filter_map(|&(i, e)| Letter::new(i, e)).collect() }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|l| l.index).max().unwrap_or(0)
    }

    /// Number of letters with the given index (an `x^2` counts once).
    pub fn occurrences(&self, index: usize) -> usize {
        self.letters.iter().filter(|l| l.index == index).count()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0].index != w[1].index)
    }

    /// Merges adjacent equal-index letters mod 3 until none remain.
    pub fn free_reduce(&self) -> Word {
        Word { alphabet: self.alphabet, letters: reduce_letters(&self.letters) }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        let alphabet = match (self.is_empty(), other.is_empty()) {
            (true, _) => other.alphabet,
            (false, true) => self.alphabet,
            (false, false) if self.alphabet == other.alphabet => self.alphabet,
            _ => return Err(Error::WrongAlphabet { expected: self.alphabet.name() }),
        };
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { alphabet, letters })
    }

    pub fn inverse(&self) -> Word {
        Word { alphabet: self.alphabet, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn pow(&self, k: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Word { alphabet: self.alphabet, letters }
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n < 3 {
            return Err(Error::InvalidDegree(n, 3));
        }
        if let Some(l) = self.letters.iter().find(|l| l.index < 1 || l.index + 2 > n) {
            if l.index < 1 {
                return Err(Error::IndexOutOfRange { index: 0, max: n - 2 });
            }
            return Err(Error::DegreeTooSmall { index: l.index, needed: self.max_index() + 2, n });
        }
        Ok(())
    }

    /// The product of the letters' permutations, rightmost letter applied first.
    pub fn evaluate(&self, n: usize) -> Result<Permutation> {
        self.check_degree(n)?;
        let mut acc = Permutation::identity_unchecked(n);
        match self.alphabet {
            Alphabet::Local => {
                for l in &self.letters {
                    acc.right_mul_three_cycle(l.index, l.exponent);
                }
            }
            Alphabet::Carmichael => {
                for l in &self.letters {
                    let v = carmichael::v_perm(l.index, n)?.pow(l.exponent as u32);
                    acc = acc.compose_unchecked(&v);
                }
            }
        }
        Ok(acc)
    }

    /// Evaluates under an arbitrary assignment: letter `i` maps to `images[i - 1]`.
    pub fn evaluate_with(&self, images: &[Permutation]) -> Result<Permutation> {
        let first = images.first().ok_or(Error::InvalidDegree(0, 1))?;
        let n = first.degree();
        let mut acc = Permutation::identity_unchecked(n);
        for l in &self.letters {
            let g = images
                .get(l.index.wrapping_sub(1))
                .ok_or(Error::IndexOutOfRange { index: l.index, max: images.len() })?;
            if g.degree() != n {
                return Err(Error::DegreeMismatch(n, g.degree()));
            }
            acc = acc.compose_unchecked(g);
            if l.exponent == 2 {
                acc = acc.compose_unchecked(g);
            }
        }
        Ok(acc)
    }

    /// Parses `e` or a whitespace-separated sequence of `x<i>[^<e>]` / `v<i>[^<e>]`.
    pub fn parse(text: &str) -> Result<Word> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut alphabet: Option<Alphabet> = None;
        let mut letters = Vec::new();
        let mut saw_e = false;
        let mut tokens = 0;
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos >= bytes.len() {
                break;
            }
            let start = pos;
            tokens += 1;
            let this = match bytes[pos] {
                b'x' => Alphabet::Local,
                b'v' => Alphabet::Carmichael,
                b'e' => {
                    pos += 1;
                    if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                        return Err(parse_err(pos, "unexpected character after 'e'"));
                    }
                    saw_e = true;
                    continue;
                }
                _ => return Err(parse_err(pos, "expected 'x', 'v' or 'e'")),
            };
            match alphabet {
                Some(a) if a != this => return Err(parse_err(start, "mixed alphabets in one word")),
                _ => alphabet = Some(this),
            }
            pos += 1;
            let (index, end) = digits(text, pos)?;
            if index == 0 {
                return Err(parse_err(pos, "generator index must be at least 1"));
            }
            pos = end;
            let mut exponent: i64 = 1;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                let negative = pos < bytes.len() && bytes[pos] == b'-';
                if negative || (pos < bytes.len() && bytes[pos] == b'+') {
                    pos += 1;
                }
                let (mag, end) = digits(text, pos)?;
                // only the residue mod 3 matters
                let r = (mag % 3) as i64;
                exponent = if negative { -r } else { r };
                pos = end;
            }
            if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                return Err(parse_err(pos, "unexpected character in letter"));
            }
            if let Some(l) = Letter::new(index, exponent) {
                letters.push(l);
            }
        }
        if tokens == 0 {
            return Err(parse_err(0, "empty input (write 'e' for the empty word)"));
        }
        if saw_e && tokens > 1 {
            return Err(parse_err(0, "'e' must stand alone"));
        }
        Ok(Word { alphabet: alphabet.unwrap_or(Alphabet::Local), letters })
    }
}

fn digits(text: &str, start: usize) -> Result<(usize, usize)> {
    let bytes = text.as_bytes();
    let mut end = start;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == start {
        return Err(parse_err(start, "expected digits"));
    }
    let v = text[start..end].parse::<usize>().map_err(|_| parse_err(start, "number too large"))?;
    Ok((v, end))
}

pub(crate) fn reduce_letters(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        push_reduced(&mut out, l);
    }
    out
}

/// Appends `l`, merging with the last letter when the indices agree.
pub(crate) fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    match out.last_mut() {
        Some(last) if last.index == l.index => {
            let e = (last.exponent + l.exponent) % 3;
            if e == 0 {
                out.pop();
            } else {
                last.exponent = e;
            }
        }
        _ => out.push(l),
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        let p = self.alphabet.prefix();
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}{}", l.index)?;
            if l.exponent == 2 {
                f.write_str("^2")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl core::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("x1 x2^-1 x3").letters(), &[Letter::gen(1), Letter::inv(2), Letter::gen(3)]);
        assert!(w("x2^3").is_empty());
        assert!(w("e").is_empty());
        assert_eq!(w("  v3^4  ").letters(), &[Letter::gen(3)]);
        assert_eq!(w("v3").alphabet(), Alphabet::Carmichael);
        assert_eq!(w("x1^-2").letters(), &[Letter::gen(1)]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Word::parse("x1 v2"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(Word::parse("x0"), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(Word::parse("y1"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(Word::parse("x"), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(Word::parse("x1^"), Err(Error::Parse { .. })));
        assert!(matches!(Word::parse("x1x2"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(Word::parse(""), Err(Error::Parse { .. })));
        assert!(matches!(Word::parse("e x1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn format_examples() {
        assert_eq!(Word::local(&[(1, 1), (2, 2)]).to_string(), "x1 x2^2");
        assert_eq!(Word::empty(Alphabet::Local).to_string(), "e");
        assert_eq!(Word::from_pairs(Alphabet::Carmichael, &[(3, 1)]).to_string(), "v3");
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w("x1 x1").free_reduce(), w("x1^2"));
        assert!(w("x1 x1^2").free_reduce().is_empty());
        let nested = w("x2 x1 x1 x1 x2^2");
        assert!(nested.free_reduce().is_empty());
        assert!(nested.evaluate(4).unwrap().is_identity());
        assert!(w("x1 x2 x1").is_reduced());
        assert!(!w("x1 x1").is_reduced());
    }

    #[test]
    fn evaluate_examples() {
        // [2,4,1,5,3] computed by composing (1 2 3)(2 4 3)(3 4 5) right to left
        let expected = Permutation::from_images(&[2, 4, 1, 5, 3]).unwrap();
        assert_eq!(w("x1 x2^-1 x3").evaluate(5).unwrap(), expected);
        assert_eq!(w("x3 x1").evaluate(5).unwrap(), expected);
        assert!(w("e").evaluate(6).unwrap().is_identity());
        assert_eq!(w("x1^2").evaluate(3).unwrap().images(), vec![3, 1, 2]);
    }

    #[test]
    fn evaluate_reports_minimal_degree() {
        assert_eq!(w("x1 x4").evaluate(5), Err(Error::DegreeTooSmall { index: 4, needed: 6, n: 5 }));
        assert_eq!(w("x1").evaluate(2), Err(Error::InvalidDegree(2, 3)));
    }

    #[test]
    fn evaluate_with_standard_images_matches_evaluate() {
        let n = 6;
        let images: Vec<Permutation> = (1..=n - 2).map(|i| Permutation::three_cycle(i, n).unwrap()).collect();
        let word = w("x1 x3^2 x4 x2 x2 x1^2");
        assert_eq!(word.evaluate_with(&images).unwrap(), word.evaluate(n).unwrap());
    }

    fn arb_word(max_index: usize, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((1..=max_index, 1i64..=2), 0..max_len).prop_map(|v| Word::local(&v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn free_reduce_preserves_value(
            (word, n) in (3usize..=9).prop_flat_map(|n| (arb_word(n - 2, 40), Just(n)))
        ) {
            let reduced = word.free_reduce();
            prop_assert!(reduced.is_reduced());
            prop_assert_eq!(reduced.evaluate(n).unwrap(), word.evaluate(n).unwrap());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn evaluate_is_a_homomorphism(u in arb_word(6, 20), v in arb_word(6, 20)) {
            let n = 8;
            let joined = u.concat(&v).unwrap().evaluate(n).unwrap();
            prop_assert_eq!(joined, u.evaluate(n).unwrap().compose(&v.evaluate(n).unwrap()).unwrap());
        }

        #[test]
        fn format_parse_roundtrip(word in arb_word(12, 20)) {
            let reduced = word.free_reduce();
            prop_assert_eq!(Word::parse(&reduced.to_string()).unwrap(), reduced);
        }

        #[test]
        fn local_words_are_even(word in arb_word(7, 30)) {
            prop_assert!(word.evaluate(9).unwrap().is_even());
        }

        #[test]
        fn inverse_cancels(word in arb_word(5, 30)) {
            prop_assert!(word.concat(&word.inverse()).unwrap().free_reduce().is_empty());
        }
    }
}
