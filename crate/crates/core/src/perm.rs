//! Finite permutations of `{1..n}` in one-line form.
//!
//! Points are 1-based at the API boundary. Composition is function
//! composition: `p.compose(&q)` maps `v` to `p(q(v))`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::error::{parse_err, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A bijection of `{1..n}`. Stored 0-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Permutation> {
        if n < 1 {
            return Err(Error::InvalidDegree(n, 1));
        }
        Ok(Self::identity_unchecked(n))
    }

    pub(crate) fn identity_unchecked(n: usize) -> Permutation {
        Permutation { images: (0..n as u32).collect() }
    }

    /// Builds a permutation from 1-based images: `images[p - 1]` is the image of `p`.
    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        if n < 1 {
            return Err(Error::InvalidDegree(0, 1));
        }
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::with_capacity(n);
        for (pos, &v) in images.iter().enumerate() {
            if v < 1 || v > n {
                return Err(parse_err(pos, alloc::format!("image {v} outside 1..={n}")));
            }
            if core::mem::replace(&mut seen[v - 1], true) {
                return Err(parse_err(pos, alloc::format!("value {v} repeated")));
            }
            out.push((v - 1) as u32);
        }
        Ok(Permutation { images: out })
    }

    /// The 3-cycle `(i, i+1, i+2)` of degree `n`, the image of `x_i`.
    pub fn three_cycle(i: usize, n: usize) -> Result<Permutation> {
        if i < 1 || i + 2 > n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(2) });
        }
        let mut p = Self::identity_unchecked(n);
        p.images[i - 1] = i as u32;
        p.images[i] = i as u32 + 1;
        p.images[i + 1] = i as u32 - 1;
        Ok(p)
    }

    /// Cycle `(a_1 a_2 ... a_k)` of degree `n`, 1-based points.
    pub fn cycle(points: &[usize], n: usize) -> Result<Permutation> {
        if n < 1 {
            return Err(Error::InvalidDegree(n, 1));
        }
        let mut p = Self::identity_unchecked(n);
        let mut seen = alloc::vec![false; n];
        for (pos, &a) in points.iter().enumerate() {
            if a < 1 || a > n {
                return Err(parse_err(pos, alloc::format!("point {a} outside 1..={n}")));
            }
            if core::mem::replace(&mut seen[a - 1], true) {
                return Err(parse_err(pos, alloc::format!("point {a} repeated")));
            }
        }
        for (k, &a) in points.iter().enumerate() {
            let b = points[(k + 1) % points.len()];
            p.images[a - 1] = (b - 1) as u32;
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `v`.
    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1] as usize + 1
    }

    /// 1-based one-line form.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    pub fn fixes(&self, v: usize) -> bool {
        self.apply(v) == v
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&v| self.images[v as usize]).collect() }
    }

    /// In place `self = self ∘ x_i^exp` where `x_i = (i, i+1, i+2)`.
    pub(crate) fn right_mul_three_cycle(&mut self, i: usize, exp: u8) {
        let a = i - 1;
        let (pa, pb, pc) = (self.images[a], self.images[a + 1], self.images[a + 2]);
        match exp % 3 {
            1 => {
                // x_i sends a->a+1->a+2->a
                self.images[a] = pb;
                self.images[a + 1] = pc;
                self.images[a + 2] = pa;
            }
            2 => {
                self.images[a] = pc;
                self.images[a + 1] = pa;
                self.images[a + 2] = pb;
            }
            _ => {}
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = alloc::vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            out[v as usize] = i as u32;
        }
        Permutation { images: out }
    }

    pub fn pow(&self, mut e: u32) -> Permutation {
        let mut acc = Self::identity_unchecked(self.degree());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            base = base.compose_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch(self.degree(), g.degree()));
        }
        let mut out = alloc::vec![0u32; self.degree()];
        for (v, &w) in self.images.iter().enumerate() {
            out[g.images[v] as usize] = g.images[w as usize];
        }
        Ok(Permutation { images: out })
    }

    /// Disjoint cycles of length ≥ 2, each starting at its minimum, sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cyc.push(v + 1);
                v = self.images[v] as usize;
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    fn cycle_count_including_fixed(&self) -> usize {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.images[v] as usize;
            }
        }
        count
    }

    pub fn parity(&self) -> Parity {
        if (self.degree() - self.cycle_count_including_fixed()).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Index of this permutation in lexicographic order of one-line forms,
    /// in `0..n!`. Panics if `n!` overflows `u64` (n > 20).
    pub fn lex_index(&self) -> u64 {
        let n = self.degree();
        assert!(n <= 20, "lex_index supports degree at most 20");
        let mut used = alloc::vec![false; n];
        let mut idx = 0u64;
        for (pos, &v) in self.images.iter().enumerate() {
            let smaller = used[..v as usize].iter().filter(|u| !**u).count() as u64;
            idx = idx * (n - pos) as u64 + smaller;
            used[v as usize] = true;
        }
        idx
    }

    /// Parses one-line form `"a1,a2,...,an"` or cycle form `"(1 2 3)(4 5)"`.
    /// Cycle entries may be separated by spaces or commas; `"()"` is the identity.
    pub fn parse(text: &str, n: usize) -> Result<Permutation> {
        if n < 1 {
            return Err(Error::InvalidDegree(n, 1));
        }
        let lead = text.len() - text.trim_start().len();
        if text.trim().is_empty() {
            return Err(parse_err(0, "empty permutation"));
        }
        if text[lead..].starts_with('(') {
            parse_cycles(text, n)
        } else {
            parse_one_line(text, n)
        }
    }

    /// Cycle notation, `"()"` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return String::from("()");
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (k, v) in c.iter().enumerate() {
                if k > 0 {
                    s.push(' ');
                }
                let _ = write!(s, "{v}");
            }
            s.push(')');
        }
        s
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn parse_number(text: &str, start: usize) -> Result<(usize, usize)> {
    let bytes = text.as_bytes();
    let mut end = start;
    while end < bytes.len() && bytes[end].is_ascii_digit() {
        end += 1;
    }
    if end == start {
        return Err(parse_err(start, "expected a number"));
    }
    let value = text[start..end].parse::<usize>().map_err(|_| parse_err(start, "number too large"))?;
    Ok((value, end))
}

fn skip_ws(bytes: &[u8], mut pos: usize) -> usize {
    while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
        pos += 1;
    }
    pos
}

fn parse_one_line(text: &str, n: usize) -> Result<Permutation> {
    let bytes = text.as_bytes();
    let mut pos = skip_ws(bytes, 0);
    let mut images = Vec::with_capacity(n);
    let mut starts = Vec::with_capacity(n);
    loop {
        let (v, end) = parse_number(text, pos)?;
        images.push(v);
        starts.push(pos);
        pos = skip_ws(bytes, end);
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b',' {
            return Err(parse_err(pos, "expected ','"));
        }
        pos = skip_ws(bytes, pos + 1);
    }
    if images.len() != n {
        return Err(parse_err(0, alloc::format!("expected {n} images, found {}", images.len())));
    }
    Permutation::from_images(&images).map_err(|e| match e {
        Error::Parse { pos, msg } => Error::Parse { pos: starts[pos], msg },
        other => other,
    })
}

fn parse_cycles(text: &str, n: usize) -> Result<Permutation> {
    let bytes = text.as_bytes();
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut seen = alloc::vec![false; n];
    let mut pos = skip_ws(bytes, 0);
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(parse_err(pos, "expected '('"));
        }
        pos = skip_ws(bytes, pos + 1);
        let mut cycle = Vec::new();
        while pos < bytes.len() && bytes[pos] != b')' {
            let start = pos;
            let (v, end) = parse_number(text, pos)?;
            if v < 1 || v > n {
                return Err(parse_err(start, alloc::format!("point {v} outside 1..={n}")));
            }
            if core::mem::replace(&mut seen[v - 1], true) {
                return Err(parse_err(start, alloc::format!("point {v} repeated")));
            }
            cycle.push(v - 1);
            pos = skip_ws(bytes, end);
            if pos < bytes.len() && bytes[pos] == b',' {
                pos = skip_ws(bytes, pos + 1);
            }
        }
        if pos >= bytes.len() {
            return Err(parse_err(pos, "unterminated cycle"));
        }
        for (k, &a) in cycle.iter().enumerate() {
            images[a] = cycle[(k + 1) % cycle.len()] as u32;
        }
        pos = skip_ws(bytes, pos + 1);
    }
    Ok(Permutation { images })
}

/// One-line form, e.g. `2,1,4,3`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_char(',')?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}
