//! Permutations of `{0, ..., n}`: weak-order neighborhoods, reduced
//! expressions, and the dictionary between permutations and triangulations.
//!
//! Products compose left-to-right: `u.then(v)` applies `u` first. Under this
//! convention, extending a reduced expression on the right by the simple
//! reflection `s_i` swaps the *values* `i-1, i` in the one-line form, and
//! multiplying on the left swaps adjacent *positions*. Flip-graph edges are
//! position swaps; Mizuno ideal products follow reduced-expression order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// A permutation of `{0,...,n}` in one-line notation: `one_line[p] = w(p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Permutation> {
        let n1 = one_line.len();
        if n1 < 2 {
            return Err(Error::InvalidPermutation(n1.saturating_sub(1)));
        }
        let mut seen = vec![false; n1];
        for &v in &one_line {
            if v >= n1 || seen[v] {
                return Err(Error::InvalidPermutation(n1 - 1));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            one_line: (0..=n).collect(),
        }
    }

    /// The longest element `n, n-1, ..., 0`.
    pub fn longest(n: usize) -> Permutation {
        Permutation {
            one_line: (0..=n).rev().collect(),
        }
    }

    /// Rank `n`: acts on `{0,...,n}`.
    pub fn rank(&self) -> usize {
        self.one_line.len() - 1
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn apply(&self, x: usize) -> usize {
        self.one_line[x]
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.rank(), other.rank());
        Permutation {
            one_line: self.one_line.iter().map(|&v| other.one_line[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.one_line.len()];
        for (p, &v) in self.one_line.iter().enumerate() {
            inv[v] = p;
        }
        Permutation { one_line: inv }
    }

    /// The simple reflection `s_i`, the transposition of `i-1` and `i`.
    pub fn simple_reflection(n: usize, i: usize) -> Permutation {
        assert!((1..=n).contains(&i));
        let mut one_line: Vec<usize> = (0..=n).collect();
        one_line.swap(i - 1, i);
        Permutation { one_line }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let ol = &self.one_line;
        let mut count = 0;
        for p in 0..ol.len() {
            for q in p + 1..ol.len() {
                if ol[p] > ol[q] {
                    count += 1;
                }
            }
        }
        count
    }

    fn descents(&self) -> Vec<usize> {
        (1..self.one_line.len())
            .filter(|&i| self.one_line[i - 1] > self.one_line[i])
            .collect()
    }

    /// Lexicographically smallest reduced expression, by repeatedly peeling
    /// the smallest descent off the left. The letters multiply left-to-right:
    /// `w = s_{i_1} s_{i_2} ... s_{i_k}` with `s_{i_1}` applied first.
    pub fn reduced_word(&self) -> Vec<usize> {
        self.reduced_word_by(|descents| descents[0])
    }

    /// Reduced expression peeling the largest descent instead; used to check
    /// that reduced-word-dependent constructions are in fact independent of
    /// the choice.
    pub fn reduced_word_largest_descent(&self) -> Vec<usize> {
        self.reduced_word_by(|descents| *descents.last().unwrap())
    }

    fn reduced_word_by(&self, pick: impl Fn(&[usize]) -> usize) -> Vec<usize> {
        let mut letters = Vec::with_capacity(self.length());
        let mut u = self.one_line.clone();
        loop {
            let descents: Vec<usize> = (1..u.len()).filter(|&i| u[i - 1] > u[i]).collect();
            if descents.is_empty() {
                return letters;
            }
            let i = pick(&descents);
            letters.push(i);
            u.swap(i - 1, i);
        }
    }

    /// Recompose a word of reflection indices under the left-to-right
    /// convention.
    pub fn from_reduced_word(n: usize, letters: &[usize]) -> Permutation {
        let mut acc = Permutation::identity(n);
        for &i in letters {
            acc = acc.then(&Permutation::simple_reflection(n, i));
        }
        acc
    }

    /// The `n` permutations obtained by swapping adjacent positions; exactly
    /// these differ from `self` by a single internal word of the
    /// triangulation.
    pub fn weak_neighbors(&self) -> Vec<Permutation> {
        (0..self.rank())
            .map(|j| {
                let mut ol = self.one_line.clone();
                ol.swap(j, j + 1);
                Permutation { one_line: ol }
            })
            .collect()
    }

    /// Internal words of the triangulation attached to this permutation:
    /// word `X_j` has letter `a` exactly at the values `{i_0, ..., i_j}`,
    /// for `0 <= j < n`.
    pub fn internal_words(&self) -> Vec<Word> {
        let n = self.rank();
        let mut is_a = vec![false; n + 1];
        let mut words = Vec::with_capacity(n);
        for j in 0..n {
            is_a[self.one_line[j]] = true;
            let letters: Vec<Letter> = is_a
                .iter()
                .map(|&a| if a { Letter::A } else { Letter::B })
                .collect();
            words.push(Word::new(&letters).expect("internal word is mixed by construction"));
        }
        words
    }

    /// Maximal cells `C_j = {a_{i_0},...,a_{i_j}} ∪ {b_{i_j},...,b_{i_n}}`,
    /// reported as (a-set, b-set) pairs of vertex indices.
    pub fn maximal_cells(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.rank();
        (0..=n)
            .map(|j| {
                let mut a: Vec<usize> = self.one_line[..=j].to_vec();
                let mut b: Vec<usize> = self.one_line[j..].to_vec();
                a.sort_unstable();
                b.sort_unstable();
                (a, b)
            })
            .collect()
    }

    /// Recover the permutation whose triangulation has exactly these words:
    /// sort by a-count and read off the nested a-sets.
    pub fn from_internal_words(words: &[Word]) -> Result<Permutation> {
        if words.is_empty() {
            return Err(Error::NotNested);
        }
        let n = words[0].rank();
        if words.len() != n || words.iter().any(|w| w.rank() != n) {
            return Err(Error::NotNested);
        }
        let mut sorted: Vec<&Word> = words.iter().collect();
        sorted.sort_by_key(|w| w.a_count());
        let mut one_line = Vec::with_capacity(n + 1);
        let mut prev: Vec<usize> = Vec::new();
        for (j, w) in sorted.iter().enumerate() {
            let cur = w.a_positions();
            if cur.len() != j + 1 || !prev.iter().all(|v| cur.contains(v)) {
                return Err(Error::NotNested);
            }
            let new: Vec<usize> = cur.iter().copied().filter(|v| !prev.contains(v)).collect();
            debug_assert_eq!(new.len(), 1);
            one_line.push(new[0]);
            prev = cur;
        }
        let last = (0..=n).find(|v| !prev.contains(v)).ok_or(Error::NotNested)?;
        one_line.push(last);
        Permutation::new(one_line)
    }

    /// For a permutation with exactly one descent `i_{l-1} > i_l`, the word
    /// with `b` at the values before the descent and `a` at the values from
    /// the descent on. This is a bijection onto the module words: the output
    /// has the letter `a` at position `i_l` and `b` at position `i_{l-1}`,
    /// so an `a` always precedes a `b` and no shifted-projective word occurs.
    pub fn join_irreducible_word(&self) -> Result<Word> {
        let descents = self.descents();
        if descents.len() != 1 {
            return Err(Error::NotJoinIrreducible(descents.len()));
        }
        let l = descents[0];
        let mut letters = vec![Letter::A; self.one_line.len()];
        for j in 0..l {
            letters[self.one_line[j]] = Letter::B;
        }
        Word::new(&letters)
    }

    /// All permutations of `{0,...,n}` in lexicographic order of one-line
    /// forms.
    pub fn enumerate(n: usize) -> Vec<Permutation> {
        let mut all = Vec::new();
        let mut current = Vec::with_capacity(n + 1);
        let mut used = vec![false; n + 1];
        fn rec(
            n: usize,
            current: &mut Vec<usize>,
            used: &mut Vec<bool>,
            all: &mut Vec<Permutation>,
        ) {
            if current.len() == n + 1 {
                all.push(Permutation {
                    one_line: current.clone(),
                });
                return;
            }
            for v in 0..=n {
                if !used[v] {
                    used[v] = true;
                    current.push(v);
                    rec(n, current, used, all);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut all);
        all
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() <= 9 {
            for v in &self.one_line {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.one_line.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self)
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Permutation> {
        let parse_err = || Error::ParseError {
            kind: "permutation".into(),
            input: s.into(),
        };
        let one_line: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| parse_err()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(parse_err))
                .collect::<Result<_>>()?
        };
        Permutation::new(one_line)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<Permutation, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn word_set(perm: &Permutation) -> BTreeSet<String> {
        perm.internal_words().iter().map(Word::to_string).collect()
    }

    #[test]
    fn validation() {
        assert!(Permutation::new(vec![0, 1, 2]).is_ok());
        assert_eq!(
            Permutation::new(vec![0, 1, 1]),
            Err(Error::InvalidPermutation(2))
        );
        assert_eq!(
            Permutation::new(vec![0, 3]),
            Err(Error::InvalidPermutation(1))
        );
    }

    #[test]
    fn lengths() {
        assert_eq!(p("012").length(), 0);
        assert_eq!(p("321").length(), 3);
        assert_eq!(p("201").length(), 2);
    }

    #[test]
    fn reduced_words_recompose() {
        for n in 1..=5 {
            for perm in Permutation::enumerate(n) {
                let rw = perm.reduced_word();
                assert_eq!(rw.len(), perm.length());
                assert_eq!(Permutation::from_reduced_word(n, &rw), perm);
                let rw2 = perm.reduced_word_largest_descent();
                assert_eq!(rw2.len(), perm.length());
                assert_eq!(Permutation::from_reduced_word(n, &rw2), perm);
            }
        }
        assert!(p("012").reduced_word().is_empty());
        assert_eq!(p("102").reduced_word(), vec![1]);
        assert_eq!(p("120").reduced_word(), vec![2, 1]);
    }

    #[test]
    fn triangulation_words_match_known_rows() {
        assert_eq!(word_set(&p("012")), ["abb", "aab"].map(String::from).into());
        assert_eq!(word_set(&p("102")), ["bab", "aab"].map(String::from).into());
        assert_eq!(word_set(&p("210")), ["bba", "baa"].map(String::from).into());
        assert_eq!(word_set(&p("021")), ["abb", "aba"].map(String::from).into());
        assert_eq!(word_set(&p("120")), ["bab", "baa"].map(String::from).into());
        assert_eq!(word_set(&p("201")), ["bba", "aba"].map(String::from).into());
    }

    #[test]
    fn maximal_cells_at_identity() {
        let cells = p("012").maximal_cells();
        assert_eq!(
            cells,
            vec![
                (vec![0], vec![0, 1, 2]),
                (vec![0, 1], vec![1, 2]),
                (vec![0, 1, 2], vec![2]),
            ]
        );
    }

    #[test]
    fn words_round_trip_through_permutation() {
        for n in 1..=6 {
            for perm in Permutation::enumerate(n) {
                let words = perm.internal_words();
                assert_eq!(Permutation::from_internal_words(&words).unwrap(), perm);
            }
        }
    }

    #[test]
    fn from_internal_words_examples() {
        let words = vec![Word::parse("bab").unwrap(), Word::parse("baa").unwrap()];
        assert_eq!(Permutation::from_internal_words(&words).unwrap(), p("120"));
        let crossing = vec![Word::parse("abb").unwrap(), Word::parse("bba").unwrap()];
        assert_eq!(
            Permutation::from_internal_words(&crossing),
            Err(Error::NotNested)
        );
    }

    #[test]
    fn weak_neighbors_swap_one_word() {
        for n in 1..=4 {
            for perm in Permutation::enumerate(n) {
                let neighbors = perm.weak_neighbors();
                assert_eq!(neighbors.len(), n);
                let mine = word_set(&perm);
                for u in &neighbors {
                    let diff = mine.symmetric_difference(&word_set(u)).count();
                    assert_eq!(diff, 2, "{perm} vs {u}");
                }
                for u in Permutation::enumerate(n) {
                    if u != perm && !neighbors.contains(&u) {
                        let diff = mine.symmetric_difference(&word_set(&u)).count();
                        assert!(diff >= 4, "{perm} vs {u} differ by {diff}");
                    }
                }
            }
        }
        // value swaps are not flips in general: 102 and 201 differ by s_2 on
        // the right but by two internal words
        let d = word_set(&p("102"))
            .symmetric_difference(&word_set(&p("201")))
            .count();
        assert_eq!(d, 4);
    }

    #[test]
    fn join_irreducible_words_biject_onto_module_words() {
        for n in 1..=6 {
            let mut images = BTreeSet::new();
            for perm in Permutation::enumerate(n) {
                match perm.join_irreducible_word() {
                    Ok(w) => {
                        assert!(w.is_module_word(), "{perm} gave shifted word {w}");
                        assert!(images.insert(w), "duplicate image from {perm}");
                    }
                    Err(Error::NotJoinIrreducible(_)) => {}
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
            let module_words: BTreeSet<Word> = Word::enumerate(n)
                .into_iter()
                .filter(Word::is_module_word)
                .collect();
            assert_eq!(images, module_words);
        }
    }

    #[test]
    fn join_irreducible_rejects_other_descent_counts() {
        assert_eq!(
            p("012").join_irreducible_word(),
            Err(Error::NotJoinIrreducible(0))
        );
        assert_eq!(
            p("321").join_irreducible_word(),
            Err(Error::NotJoinIrreducible(2))
        );
    }

    #[test]
    fn display_round_trip() {
        for n in 1..=4 {
            for perm in Permutation::enumerate(n) {
                assert_eq!(perm.to_string().parse::<Permutation>().unwrap(), perm);
            }
        }
        let big = Permutation::identity(10);
        assert_eq!(big.to_string(), "0,1,2,3,4,5,6,7,8,9,10");
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }
}
