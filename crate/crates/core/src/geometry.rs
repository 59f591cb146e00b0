//! Exact rational geometry of the prism: vertex coordinates, facets,
//! circuits, affine independence, and Gram-determinant volumes.
//!
//! This module is the independent geometric oracle for the word calculus.
//! Everything is computed over arbitrary-precision integers and rationals;
//! determinants and ranks use fraction-free elimination.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{bareiss_det, bareiss_rank};
use crate::triangulation::Triangulation;
use crate::word::{Letter, Word};

/// A vertex of the prism: `a_i` on the top copy of the simplex, `b_i` on the
/// bottom copy.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Vertex {
    A(usize),
    B(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::A(i) => write!(f, "a{i}"),
            Vertex::B(i) => write!(f, "b{i}"),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Vertex> {
        let err = || Error::UnknownVertex(s.to_string());
        let (head, tail) = s.split_at(1);
        let i: usize = tail.parse().map_err(|_| err())?;
        match head {
            "a" => Ok(Vertex::A(i)),
            "b" => Ok(Vertex::B(i)),
            _ => Err(err()),
        }
    }
}

/// The prism at rank `n`: `2n + 2` vertices embedded in `Q^{n+3}`, together
/// with its facets and circuits.
///
/// Vertex `a_i` is `e_i + e_{n+1}` and `b_i` is `e_i + e_{n+2}` (coordinates
/// indexed from 0), matching the column matrix that defines the polytope.
pub struct PrismGeometry {
    n: usize,
    facets: Vec<BTreeSet<Vertex>>,
    /// `(({a_i, b_j}, {a_j, b_i}))` for `i < j`.
    circuits: Vec<((Vertex, Vertex), (Vertex, Vertex))>,
}

impl PrismGeometry {
    pub fn new(n: usize) -> PrismGeometry {
        assert!(n >= 1);
        let all: Vec<Vertex> = (0..=n)
            .map(Vertex::A)
            .chain((0..=n).map(Vertex::B))
            .collect();
        let mut facets: Vec<BTreeSet<Vertex>> = Vec::with_capacity(n + 3);
        facets.push((0..=n).map(Vertex::A).collect());
        facets.push((0..=n).map(Vertex::B).collect());
        for i in 0..=n {
            facets.push(
                all.iter()
                    .copied()
                    .filter(|v| !matches!(v, Vertex::A(k) | Vertex::B(k) if *k == i))
                    .collect(),
            );
        }
        let mut circuits = Vec::new();
        for i in 0..=n {
            for j in i + 1..=n {
                circuits.push(((Vertex::A(i), Vertex::B(j)), (Vertex::A(j), Vertex::B(i))));
            }
        }
        PrismGeometry { n, facets, circuits }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        (0..=self.n)
            .map(Vertex::A)
            .chain((0..=self.n).map(Vertex::B))
            .collect()
    }

    pub fn facets(&self) -> &[BTreeSet<Vertex>] {
        &self.facets
    }

    pub fn circuits(&self) -> &[((Vertex, Vertex), (Vertex, Vertex))] {
        &self.circuits
    }

    /// Exact coordinates of a vertex in `Q^{n+3}`.
    pub fn point(&self, v: Vertex) -> Vec<BigRational> {
        let dim = self.n + 3;
        let mut coords = vec![BigRational::zero(); dim];
        match v {
            Vertex::A(i) => {
                assert!(i <= self.n);
                coords[i] = BigRational::one();
                coords[self.n + 1] = BigRational::one();
            }
            Vertex::B(i) => {
                assert!(i <= self.n);
                coords[i] = BigRational::one();
                coords[self.n + 2] = BigRational::one();
            }
        }
        coords
    }

    /// The internal simplex of a word: vertex `a_i` where the letter is `a`,
    /// `b_i` where it is `b`.
    pub fn simplex_of_word(&self, w: &Word) -> Result<BTreeSet<Vertex>> {
        if w.rank() != self.n {
            return Err(Error::RankMismatch(self.n, w.rank()));
        }
        Ok((0..=self.n)
            .map(|i| match w.letter(i) {
                Letter::A => Vertex::A(i),
                Letter::B => Vertex::B(i),
            })
            .collect())
    }

    /// Inverse of `simplex_of_word`, when the set picks exactly one of
    /// `a_i, b_i` for every `i`.
    pub fn word_of_simplex(&self, simplex: &BTreeSet<Vertex>) -> Result<Word> {
        let mut letters = vec![None; self.n + 1];
        for v in simplex {
            let (i, l) = match v {
                Vertex::A(i) => (*i, Letter::A),
                Vertex::B(i) => (*i, Letter::B),
            };
            if i > self.n || letters[i].is_some() {
                return Err(Error::NotWordSimplex);
            }
            letters[i] = Some(l);
        }
        let letters: Option<Vec<Letter>> = letters.into_iter().collect();
        let letters = letters.ok_or(Error::NotWordSimplex)?;
        Word::new(&letters).map_err(|_| Error::NotWordSimplex)
    }

    /// A simplex is internal when it lies in no facet.
    pub fn is_internal(&self, simplex: &BTreeSet<Vertex>) -> bool {
        !self
            .facets
            .iter()
            .any(|facet| simplex.is_subset(facet))
    }

    /// Circuit criterion for interior intersection of two internal word
    /// simplices: some circuit has one half inside each. Returns the witness
    /// circuit as `(i, j)` when they intersect.
    pub fn interior_intersection_witness(
        &self,
        s1: &BTreeSet<Vertex>,
        s2: &BTreeSet<Vertex>,
    ) -> Result<Option<(usize, usize)>> {
        self.word_of_simplex(s1)?;
        self.word_of_simplex(s2)?;
        for ((ai, bj), (aj, bi)) in &self.circuits {
            let half1 = s1.contains(ai) && s1.contains(bj);
            let half2 = s2.contains(aj) && s2.contains(bi);
            let half1r = s2.contains(ai) && s2.contains(bj);
            let half2r = s1.contains(aj) && s1.contains(bi);
            if (half1 && half2) || (half1r && half2r) {
                if let (Vertex::A(i), Vertex::B(j)) = (ai, bj) {
                    return Ok(Some((*i, *j)));
                }
            }
        }
        Ok(None)
    }

    pub fn interiors_intersect(
        &self,
        s1: &BTreeSet<Vertex>,
        s2: &BTreeSet<Vertex>,
    ) -> Result<bool> {
        Ok(self.interior_intersection_witness(s1, s2)?.is_some())
    }
}

/// Scale rational points to integer vectors by the common denominator;
/// returns the scaled points and the denominator.
fn scale_to_integers(points: &[Vec<BigRational>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut denom = BigInt::one();
    for p in points {
        for c in p {
            denom = denom.lcm(c.denom());
        }
    }
    let scaled = points
        .iter()
        .map(|p| {
            p.iter()
                .map(|c| c.numer() * (&denom / c.denom()))
                .collect()
        })
        .collect();
    (scaled, denom)
}

/// Are the points affinely independent? Exact: the rank of the difference
/// matrix must be one less than the number of points.
pub fn affinely_independent(points: &[Vec<BigRational>]) -> bool {
    if points.len() <= 1 {
        return true;
    }
    let (scaled, _) = scale_to_integers(points);
    let diffs: Vec<Vec<BigInt>> = scaled[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(&scaled[0])
                .map(|(x, y)| x - y)
                .collect()
        })
        .collect();
    bareiss_rank(&diffs) == points.len() - 1
}

/// Squared k-volume of the simplex on `k + 1` points: `det(G G^T) / (k!)^2`
/// with `G` the matrix of edge differences. Exact rational.
pub fn simplex_volume_sq(points: &[Vec<BigRational>]) -> Result<BigRational> {
    assert!(!points.is_empty());
    let k = points.len() - 1;
    let (scaled, denom) = scale_to_integers(points);
    let diffs: Vec<Vec<BigInt>> = scaled[1..]
        .iter()
        .map(|p| p.iter().zip(&scaled[0]).map(|(x, y)| x - y).collect())
        .collect();
    let gram: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    diffs[i]
                        .iter()
                        .zip(&diffs[j])
                        .map(|(x, y)| x * y)
                        .sum::<BigInt>()
                })
                .collect()
        })
        .collect();
    let det = bareiss_det(&gram);
    if det.is_zero() && k > 0 {
        return Err(Error::DegenerateSimplex);
    }
    debug_assert!(!det.is_negative(), "Gram determinants are nonnegative");
    let factorial: BigInt = (1..=k as u64).map(BigInt::from).product::<BigInt>().max(BigInt::one());
    let num = det;
    let den = &factorial * &factorial * denom.pow(2 * k as u32);
    Ok(BigRational::new(num, den))
}

/// One named check of the geometric verification report.
#[derive(Clone, Debug, Serialize)]
pub struct GeometryCheck {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Result of verifying that a combinatorial triangulation is geometrically a
/// triangulation: independent cells, disjoint interiors, equal volumes
/// summing to the prism volume, and facet-to-facet gluing.
#[derive(Clone, Debug, Serialize)]
pub struct GeometryReport {
    pub n: usize,
    pub permutation: String,
    pub checks: Vec<GeometryCheck>,
    pub pass: bool,
}

impl GeometryReport {
    fn push(&mut self, name: &str, pass: bool, witness: Option<String>) {
        self.pass &= pass;
        self.checks.push(GeometryCheck {
            name: name.to_string(),
            pass,
            witness,
        });
    }
}

/// Squared volume shared by every maximal cell of every triangulation at
/// rank `n`, computed from the identity permutation's triangulation.
pub fn reference_cell_volume_sq(g: &PrismGeometry) -> BigRational {
    let identity = crate::perm::Permutation::identity(g.rank());
    let t = Triangulation::new(identity.internal_words()).expect("identity triangulation");
    let cells = cell_vertex_sets(&t);
    let points: Vec<Vec<BigRational>> = cells[0].iter().map(|&v| g.point(v)).collect();
    simplex_volume_sq(&points).expect("reference cell is non-degenerate")
}

fn cell_vertex_sets(t: &Triangulation) -> Vec<BTreeSet<Vertex>> {
    t.maximal_cells()
        .iter()
        .map(|(a, b)| {
            a.iter()
                .map(|&i| Vertex::A(i))
                .chain(b.iter().map(|&i| Vertex::B(i)))
                .collect()
        })
        .collect()
}

pub fn verify_triangulation_geometry(g: &PrismGeometry, t: &Triangulation) -> GeometryReport {
    let n = g.rank();
    let mut report = GeometryReport {
        n,
        permutation: t.permutation().to_string(),
        checks: Vec::new(),
        pass: true,
    };

    let cells = cell_vertex_sets(t);
    report.push(
        "cell_count",
        cells.len() == n + 1,
        (cells.len() != n + 1).then(|| format!("{} cells", cells.len())),
    );

    let mut bad_cell = None;
    for (idx, cell) in cells.iter().enumerate() {
        let points: Vec<Vec<BigRational>> = cell.iter().map(|&v| g.point(v)).collect();
        if cell.len() != n + 2 || !affinely_independent(&points) {
            bad_cell = Some(idx);
            break;
        }
    }
    report.push(
        "cells_affinely_independent",
        bad_cell.is_none(),
        bad_cell.map(|i| format!("cell {i}")),
    );

    let mut internal_witness = None;
    for word in t.words() {
        let s = g.simplex_of_word(word).expect("ranks match");
        if !g.is_internal(&s) || !affinely_independent(&s.iter().map(|&v| g.point(v)).collect::<Vec<_>>()) {
            internal_witness = Some(word.to_string());
            break;
        }
    }
    report.push(
        "internal_words_are_internal_simplices",
        internal_witness.is_none(),
        internal_witness,
    );

    let mut crossing_witness = None;
    'outer: for (i, x) in t.words().iter().enumerate() {
        for y in &t.words()[i + 1..] {
            let sx = g.simplex_of_word(x).expect("ranks match");
            let sy = g.simplex_of_word(y).expect("ranks match");
            if let Some((ci, cj)) = g
                .interior_intersection_witness(&sx, &sy)
                .expect("word simplices")
            {
                crossing_witness = Some(format!("{x} and {y} share circuit ({ci},{cj})"));
                break 'outer;
            }
        }
    }
    report.push(
        "internal_simplices_interior_disjoint",
        crossing_witness.is_none(),
        crossing_witness,
    );

    let volumes: Vec<BigRational> = cells
        .iter()
        .map(|cell| {
            let points: Vec<Vec<BigRational>> = cell.iter().map(|&v| g.point(v)).collect();
            simplex_volume_sq(&points).unwrap_or_else(|_| BigRational::zero())
        })
        .collect();
    let all_equal = volumes.windows(2).all(|p| p[0] == p[1]);
    report.push(
        "equal_cell_volumes",
        all_equal,
        (!all_equal).then(|| format!("volumes {volumes:?}")),
    );

    let reference = reference_cell_volume_sq(g);
    let total_ok = all_equal && !volumes.is_empty() && volumes[0] == reference;
    report.push(
        "cells_fill_prism_volume",
        total_ok,
        (!total_ok).then(|| format!("cell volume^2 {} vs reference {}", volumes[0], reference)),
    );

    let mut facet_witness = None;
    for (idx, pair) in cells.windows(2).enumerate() {
        let shared: BTreeSet<_> = pair[0].intersection(&pair[1]).collect();
        if shared.len() != n + 1 {
            facet_witness = Some(format!("cells {idx} and {} share {} vertices", idx + 1, shared.len()));
            break;
        }
    }
    report.push(
        "consecutive_cells_share_facet",
        facet_witness.is_none(),
        facet_witness,
    );

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn rat(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn vertex_coordinates_match_defining_matrix() {
        let g = PrismGeometry::new(2);
        assert_eq!(
            g.point(Vertex::A(0)),
            vec![rat(1), rat(0), rat(0), rat(1), rat(0)]
        );
        assert_eq!(
            g.point(Vertex::B(2)),
            vec![rat(0), rat(0), rat(1), rat(0), rat(1)]
        );
        assert_eq!(g.facets().len(), 2 + 3);
        assert_eq!(g.circuits().len(), 3);
    }

    #[test]
    fn simplices_of_words() {
        let g = PrismGeometry::new(2);
        let s = g.simplex_of_word(&w("abb")).unwrap();
        assert_eq!(
            s,
            [Vertex::A(0), Vertex::B(1), Vertex::B(2)].into_iter().collect()
        );
        assert_eq!(g.word_of_simplex(&s).unwrap(), w("abb"));
        let not_word: BTreeSet<Vertex> =
            [Vertex::A(0), Vertex::B(0), Vertex::A(1)].into_iter().collect();
        assert_eq!(g.word_of_simplex(&not_word), Err(Error::NotWordSimplex));
    }

    #[test]
    fn affine_independence() {
        let g = PrismGeometry::new(2);
        for word in Word::enumerate(2) {
            let s = g.simplex_of_word(&word).unwrap();
            let pts: Vec<_> = s.iter().map(|&v| g.point(v)).collect();
            assert!(affinely_independent(&pts));
        }
        let p = g.point(Vertex::A(0));
        assert!(!affinely_independent(&[p.clone(), p.clone()]));
        // a full circuit is affinely dependent: the two segments cross
        let circuit_pts: Vec<_> = [Vertex::A(0), Vertex::B(1), Vertex::A(1), Vertex::B(0)]
            .iter()
            .map(|&v| g.point(v))
            .collect();
        assert!(!affinely_independent(&circuit_pts));
    }

    #[test]
    fn internality_detects_exactly_word_simplices() {
        for n in 1..=5 {
            let g = PrismGeometry::new(n);
            let verts = g.vertices();
            let mut internal_count = 0;
            // all (n+1)-subsets
            let mut indices: Vec<usize> = (0..n + 1).collect();
            loop {
                let subset: BTreeSet<Vertex> = indices.iter().map(|&i| verts[i]).collect();
                let is_word = g.word_of_simplex(&subset).is_ok();
                let internal = g.is_internal(&subset);
                assert_eq!(
                    internal, is_word,
                    "subset {subset:?} internal={internal} word={is_word}"
                );
                if internal {
                    internal_count += 1;
                }
                // next combination
                let k = indices.len();
                let mut i = k;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    if indices[i] != i + verts.len() - k {
                        indices[i] += 1;
                        for j in i + 1..k {
                            indices[j] = indices[j - 1] + 1;
                        }
                        break;
                    }
                }
                if i == 0 && indices[0] == verts.len() - k {
                    break;
                }
            }
            assert_eq!(internal_count, (1usize << (n + 1)) - 2);
        }
    }

    #[test]
    fn interior_intersection_matches_word_crossing() {
        for n in 1..=5 {
            let g = PrismGeometry::new(n);
            let words = Word::enumerate(n);
            for x in &words {
                for y in &words {
                    let sx = g.simplex_of_word(x).unwrap();
                    let sy = g.simplex_of_word(y).unwrap();
                    assert_eq!(
                        g.interiors_intersect(&sx, &sy).unwrap(),
                        x.crossing(y).unwrap(),
                        "x={x} y={y}"
                    );
                }
            }
        }
    }

    #[test]
    fn unit_segment_volume() {
        let zero = vec![rat(0), rat(0)];
        let e1 = vec![rat(1), rat(0)];
        assert_eq!(simplex_volume_sq(&[zero, e1]).unwrap(), rat(1));
    }

    #[test]
    fn degenerate_simplex_is_an_error() {
        let p = vec![rat(1), rat(2)];
        assert_eq!(
            simplex_volume_sq(&[p.clone(), p.clone()]),
            Err(Error::DegenerateSimplex)
        );
    }

    #[test]
    fn rational_scaling_is_exact() {
        // triangle with legs 1/2 and 1/3: area 1/12, squared 1/144
        let a = vec![rat(0), rat(0)];
        let b = vec![BigRational::new(BigInt::from(1), BigInt::from(2)), rat(0)];
        let c = vec![rat(0), BigRational::new(BigInt::from(1), BigInt::from(3))];
        assert_eq!(
            simplex_volume_sq(&[a, b, c]).unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(144))
        );
    }

    #[test]
    fn cells_have_equal_volumes_filling_the_prism() {
        for n in 1..=4 {
            let g = PrismGeometry::new(n);
            let reference = reference_cell_volume_sq(&g);
            for t in Triangulation::enumerate(n) {
                let cells = cell_vertex_sets(&t);
                for cell in &cells {
                    let pts: Vec<_> = cell.iter().map(|&v| g.point(v)).collect();
                    assert_eq!(simplex_volume_sq(&pts).unwrap(), reference);
                }
            }
        }
    }

    #[test]
    fn geometry_reports() {
        for n in 1..=3 {
            let g = PrismGeometry::new(n);
            for perm in Permutation::enumerate(n) {
                let t = Triangulation::new(perm.internal_words()).unwrap();
                let report = verify_triangulation_geometry(&g, &t);
                assert!(report.pass, "{report:?}");
            }
        }
    }

    #[test]
    fn vertex_labels_parse() {
        assert_eq!("a0".parse::<Vertex>().unwrap(), Vertex::A(0));
        assert_eq!("b12".parse::<Vertex>().unwrap(), Vertex::B(12));
        assert!("c1".parse::<Vertex>().is_err());
        assert!("a".parse::<Vertex>().is_err());
    }
}
