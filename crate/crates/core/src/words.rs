//! Free-group words, presentations and Fox calculus.
//!
//! Words are freely reduced sequences of letters over a small generator
//! alphabet. Presentations only admit the two generators `x` and `y`, but the
//! word engine itself is alphabet-generic.
//!
//! Group-ring elements are kept in the free group ring `Z[F]`: equal reduced
//! words cancel, distinct reduced words never do. Fibers over the
//! abelianization are therefore formal combinations of free words. A fiber
//! that vanishes only after passing to the one-relator group is not detected.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::lattice::{IntegralPolytope, LatticePoint};

/// Display names of generators by index; the first two are the presentation
/// generators.
const GENERATOR_NAMES: &str = "xyzabcdefghijklmnopqrstuvw";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator '{ch}' at position {pos}")]
    UnknownGenerator { pos: usize, ch: char },
    #[error("relator is empty")]
    EmptyRelator,
    #[error("proper-power test needs a nonempty word")]
    EmptyWord,
    #[error("the element is zero: every fiber vanishes")]
    ZeroElement,
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: u8,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: u8, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn name(self) -> char {
        let c = GENERATOR_NAMES
            .chars()
            .nth(self.generator as usize)
            .unwrap_or('?');
        if self.inverse {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }
}

/// The two presentation generators.
pub const X: u8 = 0;
pub const Y: u8 = 1;

/// A freely reduced word; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeWord(Vec<Letter>);

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn letter(generator: u8, inverse: bool) -> Self {
        FreeWord(vec![Letter::new(generator, inverse)])
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        FreeWord::from_letters(self.0.iter().chain(&other.0).copied())
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = FreeWord::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Exponent sum of each of the first `generators` generators.
    pub fn exponent_sums(&self, generators: usize) -> Vec<i64> {
        let mut sums = vec![0i64; generators];
        for l in &self.0 {
            if let Some(s) = sums.get_mut(l.generator as usize) {
                *s += l.sign();
            }
        }
        sums
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(a), Some(b)) if self.0.len() > 1 => *a != b.inv(),
            _ => true,
        }
    }

    /// Strips conjugating letters until the word is cyclically reduced.
    pub fn cyclic_reduce(&self) -> FreeWord {
        let w = &self.0;
        let (mut lo, mut hi) = (0, w.len());
        while hi - lo > 1 && w[lo] == w[hi - 1].inv() {
            lo += 1;
            hi -= 1;
        }
        FreeWord(w[lo..hi].to_vec())
    }

    /// Cyclic rotation by `k` letters (the result is reduced whenever the
    /// word is cyclically reduced).
    pub fn rotate(&self, k: usize) -> FreeWord {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        FreeWord::from_letters(self.0[k..].iter().chain(&self.0[..k]).copied())
    }

    /// True iff the word is literally `u^k` for some `k >= 2`.
    pub fn is_proper_power(&self) -> Result<bool, WordError> {
        let n = self.0.len();
        if n == 0 {
            return Err(WordError::EmptyWord);
        }
        Ok((1..n)
            .filter(|p| n.is_multiple_of(*p))
            .any(|p| (p..n).all(|i| self.0[i] == self.0[i - p])))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{}", l.name())?;
        }
        Ok(())
    }
}

/// Parses a word over `x, y`.
pub fn parse_word(text: &str) -> Result<FreeWord, WordError> {
    parse_word_in(text, "xy")
}

/// Parses a word over the given lowercase alphabet; the `i`-th character
/// names generator `i`.
pub fn parse_word_in(text: &str, alphabet: &str) -> Result<FreeWord, WordError> {
    parse_letters(text, alphabet).map(FreeWord::from_letters)
}

/// The letter sequence exactly as written, before free reduction.
pub fn parse_letters(text: &str, alphabet: &str) -> Result<Vec<Letter>, WordError> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        alphabet: alphabet.chars().collect(),
    };
    let letters = parser.sequence()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.error(format!("unexpected '{}'", parser.chars[parser.pos])));
    }
    Ok(letters)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    alphabet: Vec<char>,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, msg: String) -> WordError {
        WordError::Syntax { pos: self.pos, msg }
    }

    fn sequence(&mut self) -> Result<Vec<Letter>, WordError> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            if c == ')' {
                break;
            }
            let atom = self.atom()?;
            let k = self.exponent()?;
            let base: Vec<Letter> = if k < 0 {
                atom.iter().rev().map(|l| l.inv()).collect()
            } else {
                atom
            };
            for _ in 0..k.unsigned_abs() {
                out.extend_from_slice(&base);
            }
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Vec<Letter>, WordError> {
        let c = self.peek().expect("caller checked");
        let start = self.pos;
        self.pos += 1;
        match c {
            '(' => {
                let inner = self.sequence()?;
                if self.peek() != Some(')') {
                    return Err(self.error("missing ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            '1' => Ok(Vec::new()),
            c if c.is_alphabetic() => {
                let lower = c.to_lowercase().next().unwrap_or(c);
                match self.alphabet.iter().position(|&a| a == lower) {
                    Some(g) => Ok(vec![Letter::new(g as u8, c.is_uppercase())]),
                    None => Err(WordError::UnknownGenerator { pos: start, ch: c }),
                }
            }
            _ => {
                self.pos = start;
                Err(self.error(format!("unexpected '{c}'")))
            }
        }
    }

    fn exponent(&mut self) -> Result<i64, WordError> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let mut sign = 1i64;
        match self.peek() {
            Some('-') => {
                sign = -1;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected exponent digits".into()));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse::<i64>()
            .map(|k| sign * k)
            .map_err(|_| WordError::Syntax {
                pos: start,
                msg: "exponent out of range".into(),
            })
    }
}

/// An element of the free group ring: a finite integer combination of
/// reduced words with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWordSum(BTreeMap<FreeWord, BigInt>);

impl FreeWordSum {
    pub fn zero() -> Self {
        FreeWordSum(BTreeMap::new())
    }

    pub fn one() -> Self {
        FreeWordSum::monomial(FreeWord::identity(), 1)
    }

    pub fn monomial(word: FreeWord, coef: impl Into<BigInt>) -> Self {
        let mut s = FreeWordSum::zero();
        s.add_term(word, coef.into());
        s
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (FreeWord, C)>,
        C: Into<BigInt>,
    {
        let mut s = FreeWordSum::zero();
        for (w, c) in terms {
            s.add_term(w, c.into());
        }
        s
    }

    /// `g - 1` for a generator `g`.
    pub fn generator_minus_one(generator: u8) -> Self {
        FreeWordSum::from_terms([
            (FreeWord::letter(generator, false), 1),
            (FreeWord::identity(), -1),
        ])
    }

    pub fn add_term(&mut self, word: FreeWord, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        match self.0.entry(word) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &FreeWordSum) -> FreeWordSum {
        let mut s = self.clone();
        for (w, c) in &other.0 {
            s.add_term(w.clone(), c.clone());
        }
        s
    }

    pub fn neg(&self) -> FreeWordSum {
        FreeWordSum(self.0.iter().map(|(w, c)| (w.clone(), -c)).collect())
    }

    pub fn sub(&self, other: &FreeWordSum) -> FreeWordSum {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FreeWordSum) -> FreeWordSum {
        let mut s = FreeWordSum::zero();
        for (u, a) in &self.0 {
            for (v, b) in &other.0 {
                s.add_term(u.mul(v), a * b);
            }
        }
        s
    }

    /// `w * self`.
    pub fn left_mul_word(&self, w: &FreeWord) -> FreeWordSum {
        FreeWordSum::from_terms(self.0.iter().map(|(u, c)| (w.mul(u), c.clone())))
    }

    /// A single word with coefficient `+1` or `-1`.
    pub fn is_signed_word(&self) -> bool {
        self.0.len() == 1 && self.0.values().all(|c| c.abs() == BigInt::from(1))
    }
}

impl fmt::Display for FreeWordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.0.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag != BigInt::from(1) {
                write!(f, "{mag}*")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Fox derivative of `w` with respect to `generator`.
///
/// Uses `d(uv) = du + u dv`, `dx/dx = 1` and `d(x^-1)/dx = -x^-1`.
pub fn fox_derivative(w: &FreeWord, generator: u8) -> FreeWordSum {
    let mut out = FreeWordSum::zero();
    let mut prefix: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if l.generator == generator {
            if l.inverse {
                let mut p = prefix.clone();
                p.push(l);
                out.add_term(FreeWord::from_letters(p), BigInt::from(-1));
            } else {
                out.add_term(FreeWord::from_letters(prefix.iter().copied()), BigInt::from(1));
            }
        }
        prefix.push(l);
    }
    out
}

/// The projection from the generator lattice `Z^2` to `H`, the
/// abelianization of the one-relator group modulo torsion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianizationMap {
    matrix: Vec<Vec<BigInt>>,
}

impl AbelianizationMap {
    pub fn identity() -> Self {
        AbelianizationMap {
            matrix: vec![
                vec![BigInt::from(1), BigInt::from(0)],
                vec![BigInt::from(0), BigInt::from(1)],
            ],
        }
    }

    /// A rank-one map given by the images of `x` and `y`.
    pub fn covector(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        AbelianizationMap {
            matrix: vec![vec![x.into(), y.into()]],
        }
    }

    pub fn from_matrix(matrix: Vec<Vec<BigInt>>) -> Self {
        AbelianizationMap { matrix }
    }

    /// The map for a relator with exponent sums `(ex, ey)`: the identity when
    /// both vanish, otherwise the primitive covector killing `(ex, ey)` with
    /// its first nonzero entry positive.
    pub fn for_exponent_sums(ex: i64, ey: i64) -> Self {
        if ex == 0 && ey == 0 {
            return AbelianizationMap::identity();
        }
        let g = ex.gcd(&ey);
        let (mut a, mut b) = (ey / g, -ex / g);
        if a < 0 || (a == 0 && b < 0) {
            a = -a;
            b = -b;
        }
        AbelianizationMap::covector(a, b)
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    pub fn apply(&self, exponents: &[i64]) -> LatticePoint {
        LatticePoint::new(
            self.matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(exponents)
                        .map(|(a, &e)| a * BigInt::from(e))
                        .sum()
                })
                .collect(),
        )
    }

    pub fn project(&self, w: &FreeWord) -> LatticePoint {
        self.apply(&w.exponent_sums(2))
    }

    pub fn generator_image(&self, generator: u8) -> LatticePoint {
        let mut e = [0i64; 2];
        e[generator as usize] = 1;
        self.apply(&e)
    }
}

/// Groups the terms of `f` by their image in `H`.
pub fn abelianize_fibers(
    f: &FreeWordSum,
    map: &AbelianizationMap,
) -> BTreeMap<LatticePoint, FreeWordSum> {
    let mut fibers: BTreeMap<LatticePoint, FreeWordSum> = BTreeMap::new();
    for (w, c) in f.terms() {
        fibers
            .entry(map.project(w))
            .or_default()
            .add_term(w.clone(), c.clone());
    }
    fibers.retain(|_, s| !s.is_zero());
    fibers
}

/// Hull of the points of `H` carrying a nonzero fiber.
pub fn newton_polytope(
    f: &FreeWordSum,
    map: &AbelianizationMap,
) -> Result<IntegralPolytope, WordError> {
    let fibers = abelianize_fibers(f, map);
    IntegralPolytope::hull(fibers.into_keys()).map_err(|_| WordError::ZeroElement)
}

/// A two-generator one-relator presentation with its validity data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    relator: FreeWord,
    exponent_sums: (i64, i64),
    b1: u8,
    reduced: bool,
    cyclically_reduced: bool,
    proper_power: bool,
    abelianization: AbelianizationMap,
}

impl Presentation {
    /// Parses `<x,y|WORD>` or a bare `WORD`.
    pub fn parse(text: &str) -> Result<Self, WordError> {
        let (body, offset) = strip_brackets(text)?;
        let literal = parse_letters(body, "xy").map_err(|e| shift_error(e, offset))?;
        Presentation::from_literal(literal)
    }

    /// Builds the presentation from the relator letters exactly as written.
    pub fn from_literal(literal: Vec<Letter>) -> Result<Self, WordError> {
        let relator = FreeWord::from_letters(literal.iter().copied());
        if literal.is_empty() {
            return Err(WordError::EmptyRelator);
        }
        let reduced = relator.len() == literal.len();
        let cyclically_reduced = reduced && relator.is_cyclically_reduced();
        let proper_power = !relator.is_empty() && relator.is_proper_power()?;
        let sums = FreeWord(literal).exponent_sums(2);
        let (ex, ey) = (sums[0], sums[1]);
        let b1 = if ex == 0 && ey == 0 { 2 } else { 1 };
        Ok(Presentation {
            relator,
            exponent_sums: (ex, ey),
            b1,
            reduced,
            cyclically_reduced,
            proper_power,
            abelianization: AbelianizationMap::for_exponent_sums(ex, ey),
        })
    }

    pub fn from_word(relator: FreeWord) -> Result<Self, WordError> {
        Presentation::from_literal(relator.0)
    }

    pub fn relator(&self) -> &FreeWord {
        &self.relator
    }

    pub fn exponent_sums(&self) -> (i64, i64) {
        self.exponent_sums
    }

    pub fn b1(&self) -> u8 {
        self.b1
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.cyclically_reduced
    }

    pub fn is_proper_power(&self) -> bool {
        self.proper_power
    }

    /// Nonempty, reduced, cyclically reduced and `b1 = 2`.
    pub fn is_nice(&self) -> bool {
        !self.relator.is_empty() && self.reduced && self.cyclically_reduced && self.b1 == 2
    }

    pub fn abelianization(&self) -> &AbelianizationMap {
        &self.abelianization
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<x,y|{}>", self.relator)
    }
}

fn shift_error(e: WordError, offset: usize) -> WordError {
    match e {
        WordError::Syntax { pos, msg } => WordError::Syntax {
            pos: pos + offset,
            msg,
        },
        WordError::UnknownGenerator { pos, ch } => WordError::UnknownGenerator {
            pos: pos + offset,
            ch,
        },
        other => other,
    }
}

/// Splits `<x,y|WORD>` into `WORD` and its character offset.
fn strip_brackets(text: &str) -> Result<(&str, usize), WordError> {
    let trimmed = text.trim_start();
    let lead = text.chars().count() - trimmed.chars().count();
    let Some(rest) = trimmed.strip_prefix('<').or_else(|| trimmed.strip_prefix('⟨')) else {
        return Ok((text, 0));
    };
    let rest = rest.trim_end();
    let Some(inner) = rest.strip_suffix('>').or_else(|| rest.strip_suffix('⟩')) else {
        return Err(WordError::Syntax {
            pos: text.chars().count(),
            msg: "missing closing '>'".into(),
        });
    };
    let Some(bar) = inner.find('|') else {
        return Err(WordError::Syntax {
            pos: lead + 1,
            msg: "expected '|' between generators and relator".into(),
        });
    };
    let gens: Vec<&str> = inner[..bar].split(',').map(str::trim).collect();
    if gens != ["x", "y"] {
        return Err(WordError::Syntax {
            pos: lead + 1,
            msg: format!("generators must be 'x,y', got '{}'", inner[..bar].trim()),
        });
    }
    let offset = lead + 1 + inner[..=bar].chars().count();
    Ok((&inner[bar + 1..], offset))
}
