//! Words over `{a, b}` of length `n + 1`, the common coordinate system for
//! internal n-simplices of the prism, indecomposable two-term presilting
//! complexes, and indecomposable tau-rigid pairs.
//!
//! Every predicate here is a pure function of the letters; the algebra kernel
//! and the geometry module independently recompute each one from first
//! principles, which is what the verification suites check.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in `{a,b}^{n+1}` using both letters. Positions are `0..=n`.
///
/// Stored as a bit pattern (`a` = 0, `b` = 1) with explicit rank, so values
/// are `Copy`, hashable, and ordered by (rank, letters) with `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    n: usize,
    bits: u128,
}

/// Letter at one position of a word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    A,
    B,
}

/// Classification of a word: general module word, projective word
/// `a^j b^{n+1-j}`, or shifted-projective word `b^k a^{n+1-k}`.
///
/// `Projective(j)` is the word of the indecomposable projective with top `j`;
/// it still denotes a module (paired as `(P_j, 0)`). `ShiftedProjective(k)`
/// denotes the pair `(0, P_k)` and no module at all.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum WordClass {
    Module,
    Projective(usize),
    ShiftedProjective(usize),
}

/// Integer vector indexed `1..=n`. Word-derived vectors have entries in
/// `{-1, 0, 1}`; sums over summand sets can be arbitrary integers.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GVector(pub Vec<i64>);

impl Word {
    /// Validate a letter sequence as a word: length at least 2, both letters
    /// present.
    pub fn new(letters: &[Letter]) -> Result<Word> {
        if letters.len() < 2 {
            return Err(Error::TooShort);
        }
        if letters.len() > 128 {
            return Err(Error::TooLong);
        }
        let mut bits = 0u128;
        for (i, l) in letters.iter().enumerate() {
            if *l == Letter::B {
                bits |= 1 << i;
            }
        }
        let mask = (1u128 << letters.len()) - 1;
        if bits == 0 || bits == mask {
            return Err(Error::AllSameLetter);
        }
        Ok(Word {
            n: letters.len() - 1,
            bits,
        })
    }

    pub fn parse(s: &str) -> Result<Word> {
        let letters: Vec<Letter> = s
            .chars()
            .map(|c| match c {
                'a' => Ok(Letter::A),
                'b' => Ok(Letter::B),
                _ => Err(Error::WrongAlphabet),
            })
            .collect::<Result<_>>()?;
        Word::new(&letters)
    }

    /// Rank `n`: the word has `n + 1` letters.
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.n + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letter(&self, pos: usize) -> Letter {
        debug_assert!(pos <= self.n);
        if self.bits >> pos & 1 == 1 {
            Letter::B
        } else {
            Letter::A
        }
    }

    pub fn letters(&self) -> Vec<Letter> {
        (0..=self.n).map(|i| self.letter(i)).collect()
    }

    /// Positions carrying the letter `a`.
    pub fn a_positions(&self) -> Vec<usize> {
        (0..=self.n).filter(|&i| self.letter(i) == Letter::A).collect()
    }

    pub fn a_count(&self) -> usize {
        self.len() - (self.bits.count_ones() as usize)
    }

    /// All `2^{n+1} - 2` words of rank `n`, ordered by (a-count, letters).
    pub fn enumerate(n: usize) -> Vec<Word> {
        assert!(n >= 1, "rank must be at least 1");
        assert!(n < 127, "rank too large to enumerate");
        let mut words: Vec<Word> = (1..(1u128 << (n + 1)) - 1)
            .map(|bits| Word { n, bits })
            .collect();
        words.sort_by_key(|w| (w.bits.count_ones(), w.letters_key()));
        words
    }

    fn letters_key(&self) -> u128 {
        // bit-reverse so that lexicographic-on-letters agrees with integer order
        let mut k = 0u128;
        for i in 0..=self.n {
            k = (k << 1) | (self.bits >> i & 1);
        }
        k
    }

    /// Entry `i` of the g-vector looks only at positions `i-1, i`:
    /// `ab` gives `+1`, `ba` gives `-1`, equal letters give `0`.
    pub fn g_vector(&self) -> GVector {
        GVector(
            (1..=self.n)
                .map(|i| match (self.letter(i - 1), self.letter(i)) {
                    (Letter::A, Letter::B) => 1,
                    (Letter::B, Letter::A) => -1,
                    _ => 0,
                })
                .collect(),
        )
    }

    pub fn classify(&self) -> WordClass {
        let first_b = (0..=self.n).find(|&i| self.letter(i) == Letter::B);
        let first_a = (0..=self.n).find(|&i| self.letter(i) == Letter::A);
        let (p, q) = (first_a.unwrap(), first_b.unwrap());
        if p < q && (q..=self.n).all(|i| self.letter(i) == Letter::B) {
            // a^j b^{n+1-j}
            return WordClass::Projective(q);
        }
        if q < p && (p..=self.n).all(|i| self.letter(i) == Letter::A) {
            // b^k a^{n+1-k}
            return WordClass::ShiftedProjective(p);
        }
        WordClass::Module
    }

    pub fn is_module_word(&self) -> bool {
        !matches!(self.classify(), WordClass::ShiftedProjective(_))
    }

    /// Support of the corresponding module: vertices `[p+1, q]` where `p` is
    /// the first `a` and `q` the last `b`. Empty exactly for the
    /// shifted-projective words.
    pub fn support_interval(&self) -> Option<(usize, usize)> {
        let p = (0..=self.n).find(|&i| self.letter(i) == Letter::A).unwrap();
        let q = (0..=self.n).rfind(|&i| self.letter(i) == Letter::B).unwrap();
        if p > q {
            None
        } else {
            Some((p + 1, q))
        }
    }

    /// Word of the Auslander-Reiten translate of the module word:
    /// `a^r b w a b^s` maps to `b^r a w b a^s`.
    pub fn tau_word(&self) -> Result<Word> {
        match self.classify() {
            WordClass::Projective(_) => return Err(Error::IsProjective(self.to_string())),
            WordClass::ShiftedProjective(_) => {
                return Err(Error::IsShiftedProjective(self.to_string()))
            }
            WordClass::Module => {}
        }
        let r = (0..=self.n)
            .take_while(|&i| self.letter(i) == Letter::A)
            .count();
        let s = (0..=self.n)
            .rev()
            .take_while(|&i| self.letter(i) == Letter::B)
            .count();
        // A non-projective module word strips to a middle block "b w a" of
        // length at least 2.
        debug_assert!(r + s + 2 <= self.len());
        debug_assert_eq!(self.letter(r), Letter::B);
        debug_assert_eq!(self.letter(self.n - s), Letter::A);
        let letters: Vec<Letter> = (0..=self.n)
            .map(|i| {
                if i < r || i > self.n - s {
                    // complemented runs: a^r -> b^r, b^s -> a^s
                    if i < r {
                        Letter::B
                    } else {
                        Letter::A
                    }
                } else if i == r {
                    Letter::A
                } else if i == self.n - s {
                    Letter::B
                } else {
                    self.letter(i)
                }
            })
            .collect();
        Word::new(&letters)
    }

    /// Directional hom criterion: `Hom(P_x, P_y[1]) != 0` iff there are
    /// positions `i < j` with `x_i = b`, `x_j = a`, `y_i = a`, `y_j = b`.
    /// Single left-to-right pass.
    pub fn hom_positive(&self, other: &Word) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let mut seen_ba = false;
        for i in 0..=self.n {
            match (self.letter(i), other.letter(i)) {
                (Letter::A, Letter::B) if seen_ba => return Ok(true),
                (Letter::B, Letter::A) => seen_ba = true,
                _ => {}
            }
        }
        Ok(false)
    }

    /// Symmetric crossing criterion: the two simplices intersect in their
    /// interiors iff either directional hom is nonzero, equivalently iff the
    /// words contain opposite halves of a circuit.
    pub fn crossing(&self, other: &Word) -> Result<bool> {
        Ok(self.hom_positive(other)? || other.hom_positive(self)?)
    }

    /// Reconstruct a word from a `{-1,0,1}` vector, if one exists.
    pub fn from_g_vector(g: &GVector) -> Result<Word> {
        let n = g.0.len();
        if n == 0 {
            return Err(Error::TooShort);
        }
        let mut letters = vec![Letter::A; n + 1];
        let Some(first) = g.0.iter().position(|&e| e != 0) else {
            return Err(Error::NotInImage("zero vector has no word".into()));
        };
        letters[0] = if g.0[first] == 1 { Letter::A } else { Letter::B };
        for i in 1..=n {
            letters[i] = match g.0[i - 1] {
                0 => letters[i - 1],
                1 => {
                    if letters[i - 1] != Letter::A {
                        return Err(Error::NotInImage(format!(
                            "entry {} requires an 'a' at position {}",
                            i,
                            i - 1
                        )));
                    }
                    Letter::B
                }
                -1 => {
                    if letters[i - 1] != Letter::B {
                        return Err(Error::NotInImage(format!(
                            "entry {} requires a 'b' at position {}",
                            i,
                            i - 1
                        )));
                    }
                    Letter::A
                }
                e => {
                    return Err(Error::NotInImage(format!(
                        "entry {} is {}, outside {{-1,0,1}}",
                        i, e
                    )))
                }
            };
        }
        Word::new(&letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..=self.n {
            f.write_str(match self.letter(i) {
                Letter::A => "a",
                Letter::B => "b",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        Word::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(de)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl GVector {
    pub fn zero(n: usize) -> GVector {
        GVector(vec![0; n])
    }

    pub fn add(&self, other: &GVector) -> GVector {
        assert_eq!(self.0.len(), other.0.len());
        GVector(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }
}

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

impl FromStr for GVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<GVector> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries: std::result::Result<Vec<i64>, _> =
            inner.split(',').map(|t| t.trim().parse::<i64>()).collect();
        entries.map(GVector).map_err(|_| Error::ParseError {
            kind: "g-vector".into(),
            input: s.into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    /// Quadratic reference scan for the hom criterion; the production
    /// implementation must agree with this on all pairs.
    fn hom_positive_naive(x: &Word, y: &Word) -> bool {
        let n = x.rank();
        for i in 0..=n {
            for j in i + 1..=n {
                if x.letter(i) == Letter::B
                    && x.letter(j) == Letter::A
                    && y.letter(i) == Letter::A
                    && y.letter(j) == Letter::B
                {
                    return true;
                }
            }
        }
        false
    }

    /// Circuit form of the crossing criterion, straight from the geometry.
    fn crossing_by_circuits(x: &Word, y: &Word) -> bool {
        let n = x.rank();
        for i in 0..=n {
            for j in 0..=n {
                if i != j
                    && x.letter(i) == Letter::A
                    && y.letter(j) == Letter::A
                    && x.letter(j) == Letter::B
                    && y.letter(i) == Letter::B
                {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn validation() {
        assert_eq!(w("aab").rank(), 2);
        assert_eq!(w("ba").rank(), 1);
        assert_eq!(Word::parse("aaa"), Err(Error::AllSameLetter));
        assert_eq!(Word::parse("bb"), Err(Error::AllSameLetter));
        assert_eq!(Word::parse("a"), Err(Error::TooShort));
        assert_eq!(Word::parse("axb"), Err(Error::WrongAlphabet));
    }

    #[test]
    fn enumeration_counts() {
        let n2: Vec<String> = Word::enumerate(2).iter().map(Word::to_string).collect();
        assert_eq!(n2.len(), 6);
        for s in ["aab", "abb", "aba", "bab", "baa", "bba"] {
            assert!(n2.contains(&s.to_string()), "missing {s}");
        }
        assert_eq!(Word::enumerate(1).len(), 2);
        assert_eq!(Word::enumerate(5).len(), 62);
    }

    #[test]
    fn g_vectors_of_presentation_examples() {
        assert_eq!(w("aabbbab").g_vector(), GVector(vec![0, 1, 0, 0, -1, 1]));
        assert_eq!(w("bababaa").g_vector(), GVector(vec![-1, 1, -1, 1, -1, 0]));
        // projective words give standard basis vectors
        assert_eq!(w("abb").g_vector(), GVector(vec![1, 0]));
        assert_eq!(w("aab").g_vector(), GVector(vec![0, 1]));
    }

    #[test]
    fn g_vector_injective_and_invertible() {
        for n in 1..=10 {
            let words = Word::enumerate(n);
            let mut seen = std::collections::HashSet::new();
            for word in &words {
                let g = word.g_vector();
                assert!(seen.insert(g.0.clone()), "duplicate g-vector at n={n}");
                assert!(g.0.iter().any(|&e| e != 0));
                assert_eq!(Word::from_g_vector(&g).unwrap(), *word);
            }
        }
    }

    #[test]
    fn from_g_vector_rejects_non_image_vectors() {
        assert!(Word::from_g_vector(&GVector(vec![0, 0])).is_err());
        assert!(Word::from_g_vector(&GVector(vec![1, 1])).is_err());
        assert!(Word::from_g_vector(&GVector(vec![2, 0])).is_err());
        assert_eq!(Word::from_g_vector(&GVector(vec![1, 0])).unwrap(), w("abb"));
    }

    #[test]
    fn classification() {
        assert_eq!(w("baa").classify(), WordClass::ShiftedProjective(1));
        assert_eq!(w("bba").classify(), WordClass::ShiftedProjective(2));
        assert_eq!(w("aab").classify(), WordClass::Projective(2));
        assert_eq!(w("abb").classify(), WordClass::Projective(1));
        assert_eq!(w("abab").classify(), WordClass::Module);
        assert_eq!(w("ab").classify(), WordClass::Projective(1));
        assert_eq!(w("ba").classify(), WordClass::ShiftedProjective(1));
    }

    #[test]
    fn support_intervals() {
        assert_eq!(w("aabbbab").support_interval(), Some((1, 6)));
        assert_eq!(w("bababaa").support_interval(), Some((2, 4)));
        assert_eq!(w("baa").support_interval(), None);
        assert_eq!(w("bba").support_interval(), None);
        assert_eq!(w("bab").support_interval(), Some((2, 2)));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(w("aababa").tau_word().unwrap(), w("bbaabb"));
        assert_eq!(w("abab").tau_word().unwrap(), w("baba"));
        // r = 0 and s = 0: bwa -> awb
        assert_eq!(w("babba").tau_word().unwrap(), w("aabbb"));
        assert_eq!(w("bab").tau_word().unwrap(), w("aba"));
        assert_eq!(
            w("ba").tau_word().unwrap_err(),
            Error::IsShiftedProjective("ba".into())
        );
        assert_eq!(
            w("aab").tau_word().unwrap_err(),
            Error::IsProjective("aab".into())
        );
    }

    #[test]
    fn tau_output_is_module_word() {
        for n in 1..=8 {
            for word in Word::enumerate(n) {
                if word.classify() == WordClass::Module {
                    let t = word.tau_word().unwrap();
                    assert!(t.support_interval().is_some(), "tau({word}) = {t} has empty support");
                }
            }
        }
    }

    #[test]
    fn hom_positive_matches_naive_scan() {
        for n in 1..=8 {
            let words = Word::enumerate(n);
            for x in &words {
                for y in &words {
                    assert_eq!(
                        x.hom_positive(y).unwrap(),
                        hom_positive_naive(x, y),
                        "disagreement at x={x} y={y}"
                    );
                }
            }
        }
    }

    #[test]
    fn hom_positive_examples() {
        assert!(w("bab").hom_positive(&w("abb")).unwrap());
        for word in Word::enumerate(4) {
            assert!(!word.hom_positive(&word).unwrap());
        }
        // shifted-projective targets never receive an extension
        for n in 1..=5 {
            for x in Word::enumerate(n) {
                for y in Word::enumerate(n) {
                    if matches!(y.classify(), WordClass::ShiftedProjective(_)) {
                        assert!(!x.hom_positive(&y).unwrap());
                    }
                }
            }
        }
        assert_eq!(
            w("ab").hom_positive(&w("aab")).unwrap_err(),
            Error::RankMismatch(1, 2)
        );
    }

    #[test]
    fn crossing_is_symmetric_and_matches_circuits() {
        for n in 1..=6 {
            let words = Word::enumerate(n);
            for x in &words {
                for y in &words {
                    let c = x.crossing(y).unwrap();
                    assert_eq!(c, y.crossing(x).unwrap());
                    assert_eq!(c, crossing_by_circuits(x, y));
                }
            }
        }
        assert!(w("abb").crossing(&w("bab")).unwrap());
        assert!(!w("aab").crossing(&w("abb")).unwrap());
        assert!(!w("aba").crossing(&w("aba")).unwrap());
    }

    #[test]
    fn text_round_trip() {
        for n in 1..=6 {
            for word in Word::enumerate(n) {
                assert_eq!(Word::parse(&word.to_string()).unwrap(), word);
            }
        }
    }
}
