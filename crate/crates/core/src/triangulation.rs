//! Triangulations of the prism as maximal pairwise-non-crossing word sets,
//! their enumeration by backtracking, bistellar flips, and the flip graph.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::Word;

/// A triangulation of the prism at rank `n`, stored by its `n` internal
/// words. Words are kept sorted by a-count, which is the chain order of
/// their a-sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Triangulation {
    words: Vec<Word>,
}

impl Triangulation {
    /// Validate a word set: `n` words of common rank `n`, pairwise
    /// non-crossing.
    pub fn new(words: impl IntoIterator<Item = Word>) -> Result<Triangulation> {
        let mut words: Vec<Word> = words.into_iter().collect();
        words.sort_by_key(|w| (w.a_count(), *w));
        words.dedup();
        let Some(first) = words.first() else {
            return Err(Error::WrongCount {
                expected: 1,
                got: 0,
            });
        };
        let n = first.rank();
        for w in &words {
            if w.rank() != n {
                return Err(Error::RankMismatch(n, w.rank()));
            }
        }
        if words.len() != n {
            return Err(Error::WrongCount {
                expected: n,
                got: words.len(),
            });
        }
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                if words[i].crossing(&words[j])? {
                    return Err(Error::CrossingPair(
                        words[i].to_string(),
                        words[j].to_string(),
                    ));
                }
            }
        }
        // Pairwise non-crossing n-sets are automatically nested chains; a
        // failure here is a bug in the crossing predicate, not bad input.
        for pair in words.windows(2) {
            let (lo, hi) = (pair[0].a_positions(), pair[1].a_positions());
            assert!(
                lo.len() < hi.len() && lo.iter().all(|v| hi.contains(v)),
                "non-crossing words {} and {} are not nested",
                pair[0],
                pair[1],
            );
        }
        Ok(Triangulation { words })
    }

    pub fn rank(&self) -> usize {
        self.words[0].rank()
    }

    /// Internal words in chain order (increasing a-count).
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn permutation(&self) -> Permutation {
        Permutation::from_internal_words(&self.words)
            .expect("validated triangulation always comes from a permutation")
    }

    /// The `n + 1` maximal cells as (a-vertices, b-vertices) pairs.
    pub fn maximal_cells(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        self.permutation().maximal_cells()
    }

    /// All triangulations at rank `n`, by backtracking over the
    /// compatibility graph of the word set. Does not consult permutations;
    /// the equality of this enumeration with the permutation image is one of
    /// the machine-checked theorems.
    pub fn enumerate(n: usize) -> Vec<Triangulation> {
        let words = Word::enumerate(n);
        let mut chosen: Vec<Word> = Vec::with_capacity(n);
        let mut out = Vec::new();
        fn backtrack(
            words: &[Word],
            start: usize,
            chosen: &mut Vec<Word>,
            n: usize,
            out: &mut Vec<Triangulation>,
        ) {
            if chosen.len() == n {
                out.push(Triangulation {
                    words: chosen.clone(),
                });
                return;
            }
            if words.len() - start < n - chosen.len() {
                return;
            }
            for idx in start..words.len() {
                let cand = words[idx];
                if chosen
                    .iter()
                    .all(|w| !w.crossing(&cand).expect("equal ranks"))
                {
                    chosen.push(cand);
                    backtrack(words, idx + 1, chosen, n, out);
                    chosen.pop();
                }
            }
        }
        backtrack(&words, 0, &mut chosen, n, &mut out);
        out.sort();
        out
    }

    /// Exchange the word `x` for the unique other word completing the
    /// almost-complete set `self \ {x}`. Returns the new triangulation and
    /// the incoming word.
    pub fn flip(&self, x: &Word) -> Result<(Triangulation, Word)> {
        if !self.contains(x) {
            return Err(Error::WordNotInTriangulation(x.to_string()));
        }
        let rest: Vec<Word> = self.words.iter().copied().filter(|w| w != x).collect();
        let completions: Vec<Word> = Word::enumerate(self.rank())
            .into_iter()
            .filter(|cand| {
                !rest.contains(cand)
                    && rest.iter().all(|w| !w.crossing(cand).expect("equal ranks"))
            })
            .collect();
        assert_eq!(
            completions.len(),
            2,
            "almost-complete set must have exactly two completions"
        );
        let y = *completions.iter().find(|c| *c != x).unwrap();
        let mut words = rest;
        words.push(y);
        Ok((Triangulation::new(words)?, y))
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Triangulation {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            n: usize,
            words: &'a [Word],
        }
        Wire {
            n: self.rank(),
            words: &self.words,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Triangulation {
    fn deserialize<D: serde::Deserializer<'de>>(
        de: D,
    ) -> std::result::Result<Triangulation, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            #[allow(dead_code)]
            n: usize,
            words: Vec<Word>,
        }
        let wire = Wire::deserialize(de)?;
        Triangulation::new(wire.words).map_err(serde::de::Error::custom)
    }
}

/// The flip graph: all triangulations at rank `n`, with an edge for each
/// bistellar flip. Vertices are labeled by their permutations.
#[derive(Clone, Debug, Serialize)]
pub struct FlipGraph {
    pub n: usize,
    pub vertices: Vec<Triangulation>,
    pub labels: Vec<Permutation>,
    /// Unordered pairs of vertex indices, stored with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl FlipGraph {
    pub fn build(n: usize) -> FlipGraph {
        let vertices = Triangulation::enumerate(n);
        let labels: Vec<Permutation> = vertices.iter().map(Triangulation::permutation).collect();
        let index = |t: &Triangulation| vertices.binary_search(t).expect("flip stays in the set");
        let mut edges = BTreeSet::new();
        for (i, t) in vertices.iter().enumerate() {
            for x in t.words() {
                let (t2, _) = t.flip(x).expect("word belongs to t");
                let j = index(&t2);
                edges.insert((i.min(j), i.max(j)));
            }
        }
        FlipGraph {
            n,
            vertices,
            labels,
            edges: edges.into_iter().collect(),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let u = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// DOT rendering with permutation labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph flips {\n");
        for label in &self.labels {
            out.push_str(&format!("  \"{label}\";\n"));
        }
        for &(i, j) in &self.edges {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", self.labels[i], self.labels[j]));
        }
        out.push_str("}\n");
        out
    }
}
