//! Submultiplicativity checks and colored-complex realizability for
//! cd-coefficient tables.
//!
//! A table of nonnegative cd-coefficients can be read as a prescription of
//! face counts for a vertex-colored simplicial complex: the coefficient at a
//! unit multidegree prescribes the number of vertices of that color, and the
//! coefficient at a general multidegree prescribes the number of faces whose
//! exact color support equals it.  [`check_inequalities`] and
//! [`check_product_inequality`] test the counting inequalities any such
//! complex forces on its table, and [`realizable_as_colored_complex`]
//! settles the existence question by an exact canonical-form backtracking
//! search: an answer of "no" returned within budget is definitive, not a
//! timeout.  [`witness_from_algebra`] reads a witness off a multigraded path
//! algebra, turning unit-multidegree basis elements into colored vertices
//! and nonvanishing products into faces.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::algebra::MultiGradedAlgebra;
use crate::cdindex::{CdPolynomial, CdWord, MultiDegree};
use crate::paths::LabeledPath;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("coefficient {coefficient} of {word} is negative; a face-count table must be nonnegative")]
    NegativeCoefficient { word: String, coefficient: i64 },
}

/// A failed instance of the split inequality: the coefficient at `sum`
/// exceeds the product of the coefficients at the two halves of a split of
/// its support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityViolation {
    pub sum: MultiDegree,
    pub left: MultiDegree,
    pub right: MultiDegree,
    /// Coefficient at `sum`.
    pub coefficient: i64,
    /// Product of the coefficients at `left` and `right`.
    pub bound: i128,
}

impl fmt::Display for InequalityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient {} at {} exceeds the split bound {} * {} = {}",
            self.coefficient, self.sum, self.left, self.right, self.bound
        )
    }
}

/// A failed instance of the unit-product inequality: the coefficient at
/// `multidegree` exceeds the product of the coefficients at the unit
/// multidegrees of its support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductViolation {
    pub multidegree: MultiDegree,
    pub coefficient: i64,
    /// Product of the unit-multidegree coefficients over the support.
    pub bound: i128,
}

impl fmt::Display for ProductViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient {} at {} exceeds the unit product bound {}",
            self.coefficient, self.multidegree, self.bound
        )
    }
}

/// Tests, for every multidegree `u` and every split of its support into two
/// disjoint parts `v + w = u`, that the coefficient at `u` is at most the
/// product of the coefficients at `v` and `w`.  Any complex realizing the
/// table satisfies this: a face with support `u` projects to a face with
/// support `v` and one with support `w`, and distinct faces have distinct
/// projection pairs.  Returns every violating ordered split.
pub fn check_inequalities(p: &CdPolynomial) -> Vec<InequalityViolation> {
    let n = p.n();
    let mut out = Vec::new();
    for word in CdWord::words_of_degree(n) {
        let sum = word.mdeg();
        let support = sum.support();
        let coefficient = p.coefficient_of_word(&word);
        for mask in 0usize..1 << support.len() {
            let mut lv = vec![0u8; n];
            let mut rv = vec![0u8; n];
            for (bit, &pos) in support.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    lv[pos - 1] = 1;
                } else {
                    rv[pos - 1] = 1;
                }
            }
            let left = MultiDegree::new(lv).expect("entries are 0 or 1");
            let right = MultiDegree::new(rv).expect("entries are 0 or 1");
            let bound = i128::from(p.coefficient(&left)) * i128::from(p.coefficient(&right));
            if i128::from(coefficient) > bound {
                out.push(InequalityViolation {
                    sum: sum.clone(),
                    left,
                    right,
                    coefficient,
                    bound,
                });
            }
        }
    }
    out
}

/// Tests, for every multidegree `u`, that the coefficient at `u` is at most
/// the product of the coefficients at the unit multidegrees `e_i` over the
/// support of `u`: a face is determined by its vertices, one per color.
/// Returns every violating multidegree.
pub fn check_product_inequality(p: &CdPolynomial) -> Vec<ProductViolation> {
    let n = p.n();
    let mut out = Vec::new();
    for word in CdWord::words_of_degree(n) {
        let mdeg = word.mdeg();
        let coefficient = p.coefficient_of_word(&word);
        let mut bound: i128 = 1;
        for &i in &mdeg.support() {
            let e = MultiDegree::unit(n, i).expect("support positions are in range");
            bound *= i128::from(p.coefficient(&e));
        }
        if i128::from(coefficient) > bound {
            out.push(ProductViolation {
                multidegree: mdeg,
                coefficient,
                bound,
            });
        }
    }
    out
}

/// Resource limits for the realizability search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Upper bound on the total vertex count of the complex searched for.
    pub max_vertices: usize,
    /// Upper bound on the number of face placements the search may try.
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_vertices: 24,
            max_nodes: 10_000_000,
        }
    }
}

/// Outcome of the realizability search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realizability {
    /// A colored complex with exactly the prescribed face counts.
    Realizable(ColoredComplexWitness),
    /// No colored complex has these face counts; the search space was
    /// covered completely, so this answer is definitive.
    Unrealizable,
    /// The budget ran out before the question was settled.
    Exhausted,
}

/// A vertex-colored simplicial complex presented by its face list.
///
/// Vertices of color `i` are numbered `0..count`; faces pick at most one
/// vertex of each color and are stored as sorted `(color, vertex)` lists.
/// Faces on fewer than two colors are implied (every vertex is a face, as is
/// the empty face) and not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredComplexWitness {
    n: usize,
    vertex_counts: Vec<usize>,
    faces: BTreeSet<Vec<(usize, usize)>>,
}

impl ColoredComplexWitness {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices of the given color (colors are 1-indexed).
    pub fn vertex_count(&self, color: usize) -> usize {
        self.vertex_counts.get(color).copied().unwrap_or(0)
    }

    pub fn total_vertices(&self) -> usize {
        self.vertex_counts.iter().sum()
    }

    /// The faces on at least two colors, as sorted `(color, vertex)` lists.
    pub fn faces(&self) -> &BTreeSet<Vec<(usize, usize)>> {
        &self.faces
    }

    /// Full independent check that this complex realizes the table `p`:
    /// well-formed faces, downward closure, and an exact re-count of faces
    /// by color support against every coefficient of `p`.
    pub fn verify(&self, p: &CdPolynomial) -> bool {
        let n = p.n();
        if self.n != n || self.vertex_counts.len() != n + 1 {
            return false;
        }
        for i in 1..=n {
            let expected = match MultiDegree::unit(n, i) {
                Ok(e) if e.is_valid() => p.coefficient(&e),
                _ => 0,
            };
            if expected < 0 || self.vertex_counts[i] != expected as usize {
                return false;
            }
        }
        for face in &self.faces {
            if face.len() < 2 {
                return false;
            }
            let mut v = vec![0u8; n];
            let mut prev = 0usize;
            for &(color, vertex) in face {
                if color <= prev || color > n || vertex >= self.vertex_counts[color] {
                    return false;
                }
                prev = color;
                v[color - 1] = 1;
            }
            let mdeg = match MultiDegree::new(v) {
                Ok(m) => m,
                Err(_) => return false,
            };
            if !mdeg.is_valid() {
                return false;
            }
            // Downward closure: every sub-face on at least two colors must
            // itself be a stored face.
            for mask in 1usize..(1 << face.len()) - 1 {
                if (mask as u32).count_ones() < 2 {
                    continue;
                }
                let sub: Vec<(usize, usize)> = face
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &cv)| cv)
                    .collect();
                if !self.faces.contains(&sub) {
                    return false;
                }
            }
        }
        let mut by_support: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        for face in &self.faces {
            let support: Vec<usize> = face.iter().map(|&(c, _)| c).collect();
            *by_support.entry(support).or_insert(0) += 1;
        }
        for word in CdWord::words_of_degree(n) {
            let support = word.mdeg().support();
            let actual: i64 = match support.len() {
                0 => 1,
                1 => self.vertex_counts[support[0]] as i64,
                _ => by_support.get(&support).copied().unwrap_or(0),
            };
            if actual != p.coefficient_of_word(&word) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for ColoredComplexWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for color in 1..self.n {
            write!(f, "color {color}:")?;
            for j in 0..self.vertex_counts[color] {
                write!(f, " v{color}_{}", j + 1)?;
            }
            writeln!(f, " ;")?;
        }
        for face in &self.faces {
            let tokens: Vec<String> = face
                .iter()
                .map(|&(c, v)| format!("v{c}_{}", v + 1))
                .collect();
            writeln!(f, "{}", tokens.join(" "))?;
        }
        Ok(())
    }
}

enum SearchStep {
    Found,
    Dead,
    Budget,
}

struct RealizabilitySearch<'a> {
    /// `(support, quota)` per block, ordered by (support size, support).
    blocks: &'a [(Vec<usize>, usize)],
    block_index: &'a BTreeMap<Vec<usize>, usize>,
    counts: &'a [usize],
    max_nodes: u64,
    nodes: u64,
    /// Faces chosen so far, one lex-increasing list of vertex tuples per
    /// block.
    chosen: Vec<Vec<Vec<usize>>>,
    /// Per color, the smallest vertex index not yet used by any chosen face.
    fresh: Vec<usize>,
}

impl RealizabilitySearch<'_> {
    fn solve_block(&mut self, bi: usize) -> SearchStep {
        if bi == self.blocks.len() {
            return SearchStep::Found;
        }
        let quota = self.blocks[bi].1;
        self.place(bi, quota, None)
    }

    fn place(&mut self, bi: usize, remaining: usize, last: Option<&[usize]>) -> SearchStep {
        if remaining == 0 {
            return self.solve_block(bi + 1);
        }
        let support = self.blocks[bi].0.clone();
        for tuple in self.candidates(&support, last) {
            if !self.is_closed(&support, &tuple) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return SearchStep::Budget;
            }
            let bumped = self.commit(bi, &support, &tuple);
            match self.place(bi, remaining - 1, Some(&tuple)) {
                SearchStep::Dead => self.undo(bi, &bumped),
                done => return done,
            }
        }
        SearchStep::Dead
    }

    /// Vertex tuples available as the next face of a block, in lexicographic
    /// order, strictly greater than `last`.  Interchangeability of vertices
    /// of one color is broken by a first-use canonical form: a coordinate
    /// may reuse any vertex seen before or introduce the single next unused
    /// one, so each color's vertices enter play in increasing order.
    fn candidates(&self, support: &[usize], last: Option<&[usize]>) -> Vec<Vec<usize>> {
        let mut caps = Vec::with_capacity(support.len());
        for &color in support {
            if self.counts[color] == 0 {
                return Vec::new();
            }
            caps.push(self.fresh[color].min(self.counts[color] - 1));
        }
        fn build(
            caps: &[usize],
            last: &[usize],
            pos: usize,
            tight: bool,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if pos == caps.len() {
                if !tight {
                    out.push(cur.clone());
                }
                return;
            }
            let lo = if tight { last[pos] } else { 0 };
            for v in lo..=caps[pos] {
                cur.push(v);
                build(caps, last, pos + 1, tight && v == lo, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(support.len());
        build(
            &caps,
            last.unwrap_or(&[]),
            0,
            last.is_some(),
            &mut cur,
            &mut out,
        );
        out
    }

    /// Downward closure against earlier blocks: every projection of the
    /// candidate face onto at least two of its colors must already be a
    /// chosen face of the corresponding smaller block.
    fn is_closed(&self, support: &[usize], tuple: &[usize]) -> bool {
        let k = support.len();
        for mask in 1usize..(1 << k) - 1 {
            if (mask as u32).count_ones() < 2 {
                continue;
            }
            let mut sub_support = Vec::new();
            let mut sub_tuple = Vec::new();
            for j in 0..k {
                if mask >> j & 1 == 1 {
                    sub_support.push(support[j]);
                    sub_tuple.push(tuple[j]);
                }
            }
            let bi = *self
                .block_index
                .get(&sub_support)
                .expect("subsets of a valid support are valid blocks");
            if !self.chosen[bi].contains(&sub_tuple) {
                return false;
            }
        }
        true
    }

    /// Records the face and advances the first-use counters; returns the
    /// colors whose counter was advanced, for [`Self::undo`].
    fn commit(&mut self, bi: usize, support: &[usize], tuple: &[usize]) -> Vec<usize> {
        let mut bumped = Vec::new();
        for (j, &color) in support.iter().enumerate() {
            if tuple[j] == self.fresh[color] {
                self.fresh[color] += 1;
                bumped.push(color);
            }
        }
        self.chosen[bi].push(tuple.to_vec());
        bumped
    }

    fn undo(&mut self, bi: usize, bumped: &[usize]) {
        self.chosen[bi].pop();
        for &color in bumped {
            self.fresh[color] -= 1;
        }
    }
}

/// Decides whether a nonnegative table is the face-count table of a
/// vertex-colored simplicial complex: one vertex color per position with a
/// unit multidegree, and for every multidegree on at least two positions
/// exactly that many faces with that exact color support, closed downward.
///
/// Returns a verified witness when one exists within the vertex budget,
/// [`Realizability::Unrealizable`] when the complete canonical search space
/// is exhausted without one (a definitive answer), and
/// [`Realizability::Exhausted`] when a budget limit stops the search early.
/// Negative coefficients are rejected as an error.
pub fn realizable_as_colored_complex(
    p: &CdPolynomial,
    budget: &SearchBudget,
) -> Result<Realizability, AnalysisError> {
    for (w, c) in p.iter() {
        if c < 0 {
            return Err(AnalysisError::NegativeCoefficient {
                word: w.to_string(),
                coefficient: c,
            });
        }
    }
    let n = p.n();
    // Every complex has exactly one empty face.
    if p.coefficient(&MultiDegree::zero(n)) != 1 {
        return Ok(Realizability::Unrealizable);
    }
    let mut counts = vec![0usize; n + 1];
    for i in 1..=n {
        if let Ok(e) = MultiDegree::unit(n, i) {
            if e.is_valid() {
                counts[i] = p.coefficient(&e) as usize;
            }
        }
    }
    if counts.iter().sum::<usize>() > budget.max_vertices {
        return Ok(Realizability::Exhausted);
    }

    let mut quota_by_support: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for word in CdWord::words_of_degree(n) {
        let support = word.mdeg().support();
        if support.len() >= 2 {
            quota_by_support.insert(support, p.coefficient_of_word(&word) as usize);
        }
    }
    let mut blocks: Vec<(Vec<usize>, usize)> = quota_by_support
        .iter()
        .map(|(s, &q)| (s.clone(), q))
        .collect();
    blocks.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let block_index: BTreeMap<Vec<usize>, usize> = blocks
        .iter()
        .enumerate()
        .map(|(i, (s, _))| (s.clone(), i))
        .collect();

    // Search-free impossibility checks: a block can never hold more faces
    // than there are distinct vertex tuples, and a face forces at least one
    // face on every at-least-two-color subset of its colors.
    for (support, quota) in &blocks {
        if *quota == 0 {
            continue;
        }
        let mut tuples: u128 = 1;
        for &i in support {
            tuples = tuples.saturating_mul(counts[i] as u128);
        }
        if *quota as u128 > tuples {
            return Ok(Realizability::Unrealizable);
        }
        for mask in 1usize..(1 << support.len()) - 1 {
            if (mask as u32).count_ones() < 2 {
                continue;
            }
            let sub: Vec<usize> = support
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            if quota_by_support.get(&sub) == Some(&0) {
                return Ok(Realizability::Unrealizable);
            }
        }
    }

    let mut search = RealizabilitySearch {
        blocks: &blocks,
        block_index: &block_index,
        counts: &counts,
        max_nodes: budget.max_nodes,
        nodes: 0,
        chosen: vec![Vec::new(); blocks.len()],
        fresh: vec![0usize; n + 1],
    };
    let step = search.solve_block(0);
    let chosen = std::mem::take(&mut search.chosen);
    match step {
        SearchStep::Found => {
            let mut faces = BTreeSet::new();
            for (bi, (support, _)) in blocks.iter().enumerate() {
                for tuple in &chosen[bi] {
                    let face: Vec<(usize, usize)> = support
                        .iter()
                        .copied()
                        .zip(tuple.iter().copied())
                        .collect();
                    faces.insert(face);
                }
            }
            Ok(Realizability::Realizable(ColoredComplexWitness {
                n,
                vertex_counts: counts,
                faces,
            }))
        }
        SearchStep::Dead => Ok(Realizability::Unrealizable),
        SearchStep::Budget => Ok(Realizability::Exhausted),
    }
}

/// Reads a colored complex off a multigraded path algebra: basis elements
/// of unit multidegree `e_i` become the vertices of color `i`, and a set of
/// such generators spans a face exactly when its product is nonzero.
/// Downward closure is automatic (a vanishing sub-product forces the full
/// product to vanish), and by unique factorization the face counts equal the
/// graded dimensions of the algebra.
pub fn witness_from_algebra(a: &MultiGradedAlgebra) -> ColoredComplexWitness {
    let n = a.n();
    let mut vertex_counts = vec![0usize; n + 1];
    for i in 1..=n {
        if let Ok(e) = MultiDegree::unit(n, i) {
            if e.is_valid() {
                vertex_counts[i] = a.graded_dimension(&e);
            }
        }
    }
    let mut faces = BTreeSet::new();
    for word in CdWord::words_of_degree(n) {
        let support = word.mdeg().support();
        if support.len() < 2 {
            continue;
        }
        let generators: Vec<&[LabeledPath]> = support
            .iter()
            .map(|&i| {
                let e = MultiDegree::unit(n, i).expect("support positions are in range");
                a.basis_at(&e)
            })
            .collect();
        if generators.iter().any(|g| g.is_empty()) {
            continue;
        }
        let mut index = vec![0usize; support.len()];
        'tuples: loop {
            let mut product = Some(a.unit());
            for (j, g) in generators.iter().enumerate() {
                let acc = product.take().expect("set on every round");
                product = a
                    .multiply(&acc, &g[index[j]])
                    .expect("generators are basis elements");
                if product.is_none() {
                    break;
                }
            }
            if product.is_some() {
                let face: Vec<(usize, usize)> = support
                    .iter()
                    .copied()
                    .zip(index.iter().copied())
                    .collect();
                faces.insert(face);
            }
            let mut j = support.len();
            while j > 0 {
                j -= 1;
                index[j] += 1;
                if index[j] < generators[j].len() {
                    continue 'tuples;
                }
                index[j] = 0;
            }
            break;
        }
    }
    ColoredComplexWitness {
        n,
        vertex_counts,
        faces,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B5: &str = "cccc 1\ndcc 3\ncdc 5\nccd 3\ndd 4\n";
    const DEGREE6: &str =
        "cccccc 1\nccccd 2\nccdcc 2\nccdd 1\ndcccc 2\ndccd 1\nddcc 1\nddd 2\n";

    fn poly(text: &str) -> CdPolynomial {
        CdPolynomial::from_text(text).unwrap()
    }

    fn mdeg(v: &[u8]) -> MultiDegree {
        MultiDegree::new(v.to_vec()).unwrap()
    }

    #[test]
    fn boolean_rank_five_table_has_no_violations() {
        let p = poly(B5);
        assert!(check_inequalities(&p).is_empty());
        assert!(check_product_inequality(&p).is_empty());
    }

    #[test]
    fn degree_six_table_has_no_violations() {
        let p = poly(DEGREE6);
        assert!(check_inequalities(&p).is_empty());
        assert!(check_product_inequality(&p).is_empty());
    }

    #[test]
    fn oversized_coefficient_is_reported_with_its_bound() {
        // The coefficient 9 at (1,0,1,0) exceeds 2 * 2 from the split into
        // unit multidegrees.
        let p = poly("cccc 1\ndcc 2\nccd 2\ndd 9\n");
        let violations = check_inequalities(&p);
        assert_eq!(violations.len(), 2);
        for v in &violations {
            assert_eq!(v.sum, mdeg(&[1, 0, 1, 0]));
            assert_eq!(v.coefficient, 9);
            assert_eq!(v.bound, 4);
        }
        assert_eq!(violations[0].left, mdeg(&[1, 0, 0, 0]));
        assert_eq!(violations[0].right, mdeg(&[0, 0, 1, 0]));
        assert_eq!(violations[1].left, mdeg(&[0, 0, 1, 0]));
        assert_eq!(violations[1].right, mdeg(&[1, 0, 0, 0]));
        assert_eq!(
            violations[0].to_string(),
            "coefficient 9 at (1,0,1,0) exceeds the split bound (1,0,0,0) * (0,0,1,0) = 4"
        );

        let products = check_product_inequality(&p);
        assert_eq!(products.len(), 1);
        assert_eq!(products[0].multidegree, mdeg(&[1, 0, 1, 0]));
        assert_eq!(products[0].coefficient, 9);
        assert_eq!(products[0].bound, 4);
        assert_eq!(
            products[0].to_string(),
            "coefficient 9 at (1,0,1,0) exceeds the unit product bound 4"
        );
    }

    #[test]
    fn single_d_coefficient_never_violates() {
        // Degree 2 leaves no room: the only splits of (1,0) involve the
        // empty multidegree, so any size of d-coefficient passes.
        let p = poly("cc 1\nd 100\n");
        assert!(check_inequalities(&p).is_empty());
        assert!(check_product_inequality(&p).is_empty());
    }

    #[test]
    fn boolean_rank_five_table_is_realizable() {
        let p = poly(B5);
        let got = realizable_as_colored_complex(&p, &SearchBudget::default()).unwrap();
        let Realizability::Realizable(w) = got else {
            panic!("expected a witness, got {got:?}");
        };
        assert!(w.verify(&p));
        assert_eq!(w.vertex_count(1), 3);
        assert_eq!(w.vertex_count(2), 5);
        assert_eq!(w.vertex_count(3), 3);
        assert_eq!(w.total_vertices(), 11);
        assert_eq!(w.faces().len(), 4);
        for face in w.faces() {
            let colors: Vec<usize> = face.iter().map(|&(c, _)| c).collect();
            assert_eq!(colors, vec![1, 3]);
        }
    }

    #[test]
    fn witness_display_lists_vertices_then_faces() {
        let p = poly(B5);
        let got = realizable_as_colored_complex(&p, &SearchBudget::default()).unwrap();
        let Realizability::Realizable(w) = got else {
            panic!("expected a witness, got {got:?}");
        };
        let text = w.to_string();
        let expected = "\
color 1: v1_1 v1_2 v1_3 ;
color 2: v2_1 v2_2 v2_3 v2_4 v2_5 ;
color 3: v3_1 v3_2 v3_3 ;
v1_1 v3_1
v1_1 v3_2
v1_1 v3_3
v1_2 v3_1
";
        assert_eq!(text, expected);
    }

    #[test]
    fn pure_c_power_realizes_as_the_empty_complex() {
        let p = poly("cccccc 1\n");
        let got = realizable_as_colored_complex(&p, &SearchBudget::default()).unwrap();
        let Realizability::Realizable(w) = got else {
            panic!("expected a witness, got {got:?}");
        };
        assert!(w.verify(&p));
        assert_eq!(w.total_vertices(), 0);
        assert!(w.faces().is_empty());

        let unit = poly("1 1\n");
        let got = realizable_as_colored_complex(&unit, &SearchBudget::default()).unwrap();
        let Realizability::Realizable(w) = got else {
            panic!("expected a witness, got {got:?}");
        };
        assert!(w.verify(&unit));
        assert_eq!(w.n(), 0);
        assert_eq!(w.to_string(), "");
    }

    #[test]
    fn triple_faces_must_project_onto_chosen_pairs() {
        // One vertex of each of the colors 1, 3, 5 and every face spanned:
        // the triple face is accepted only because all three of its pair
        // projections were chosen first.
        let p = poly(
            "cccccc 1\nccccd 1\nccdcc 1\nccdd 1\ndcccc 1\ndccd 1\nddcc 1\nddd 1\n",
        );
        let got = realizable_as_colored_complex(&p, &SearchBudget::default()).unwrap();
        let Realizability::Realizable(w) = got else {
            panic!("expected a witness, got {got:?}");
        };
        assert!(w.verify(&p));
        assert_eq!(w.total_vertices(), 3);
        assert_eq!(w.faces().len(), 4);
        assert!(w.faces().contains(&vec![(1, 0), (3, 0), (5, 0)]));
    }

    #[test]
    fn degree_six_table_is_definitively_unrealizable() {
        // Two faces on the colors {1,3,5} would need two distinct
        // projections onto some pair of those colors, but every pair block
        // has quota one.  The search must prove this, not time out.
        let p = poly(DEGREE6);
        let got = realizable_as_colored_complex(&p, &SearchBudget::default()).unwrap();
        assert_eq!(got, Realizability::Unrealizable);
    }

    #[test]
    fn wrong_empty_face_count_is_unrealizable() {
        let p = poly("cc 2\n");
        let got = realizable_as_colored_complex(&p, &SearchBudget::default()).unwrap();
        assert_eq!(got, Realizability::Unrealizable);
    }

    #[test]
    fn quota_above_tuple_count_is_unrealizable() {
        // Two faces on colors {1,3} but only one vertex of each color.
        let p = poly("cccc 1\ndcc 1\nccd 1\ndd 2\n");
        let got = realizable_as_colored_complex(&p, &SearchBudget::default()).unwrap();
        assert_eq!(got, Realizability::Unrealizable);
    }

    #[test]
    fn positive_quota_over_zero_quota_subset_is_unrealizable() {
        // A face on {1,3,5} needs a face on {1,3}, whose quota is zero.
        let p = poly("cccccc 1\nccccd 1\nccdcc 1\nccdd 1\ndcccc 1\ndccd 1\nddd 1\n");
        let got = realizable_as_colored_complex(&p, &SearchBudget::default()).unwrap();
        assert_eq!(got, Realizability::Unrealizable);
    }

    #[test]
    fn negative_coefficient_is_an_error() {
        let p = poly("cc 1\nd -1\n");
        let got = realizable_as_colored_complex(&p, &SearchBudget::default());
        assert_eq!(
            got,
            Err(AnalysisError::NegativeCoefficient {
                word: "d".into(),
                coefficient: -1,
            })
        );
    }

    #[test]
    fn vertex_budget_stops_the_search() {
        let p = poly(B5);
        let budget = SearchBudget {
            max_vertices: 5,
            max_nodes: 10_000_000,
        };
        let got = realizable_as_colored_complex(&p, &budget).unwrap();
        assert_eq!(got, Realizability::Exhausted);
    }

    #[test]
    fn node_budget_stops_the_search() {
        let p = poly(B5);
        let budget = SearchBudget {
            max_vertices: 24,
            max_nodes: 0,
        };
        let got = realizable_as_colored_complex(&p, &budget).unwrap();
        assert_eq!(got, Realizability::Exhausted);
    }

    #[test]
    fn default_budget_values() {
        let budget = SearchBudget::default();
        assert_eq!(budget.max_vertices, 24);
        assert_eq!(budget.max_nodes, 10_000_000);
    }

    #[test]
    fn verify_rejects_a_mismatched_table() {
        let p = poly(B5);
        let got = realizable_as_colored_complex(&p, &SearchBudget::default()).unwrap();
        let Realizability::Realizable(w) = got else {
            panic!("expected a witness, got {got:?}");
        };
        let other = poly("cccc 1\ndcc 3\ncdc 5\nccd 3\ndd 5\n");
        assert!(!w.verify(&other));
        let shorter = poly("ccc 1\ndc 4\ncd 6\n");
        assert!(!w.verify(&shorter));
    }

    #[test]
    fn algebra_witness_matches_boolean_rank_five() {
        let a = MultiGradedAlgebra::boolean(4).unwrap();
        let w = witness_from_algebra(&a);
        assert_eq!(w.vertex_count(1), 3);
        assert_eq!(w.vertex_count(2), 5);
        assert_eq!(w.vertex_count(3), 3);
        assert_eq!(w.faces().len(), 4);
        for face in w.faces() {
            let colors: Vec<usize> = face.iter().map(|&(c, _)| c).collect();
            assert_eq!(colors, vec![1, 3]);
        }
        assert!(w.verify(&poly(B5)));
    }

    #[test]
    fn algebra_witness_matches_octahedron() {
        let h = crate::paths::HVector::new(vec![1, 3, 3, 1]).unwrap();
        let a = MultiGradedAlgebra::new(h).unwrap();
        let w = witness_from_algebra(&a);
        assert_eq!(w.vertex_count(1), 4);
        assert_eq!(w.vertex_count(2), 6);
        assert!(w.faces().is_empty());
        assert!(w.verify(&poly("ccc 1\ndc 4\ncd 6\n")));
    }

    #[test]
    fn algebra_witness_of_rank_zero_is_empty() {
        let a = MultiGradedAlgebra::boolean(0).unwrap();
        let w = witness_from_algebra(&a);
        assert_eq!(w.n(), 0);
        assert_eq!(w.total_vertices(), 0);
        assert!(w.faces().is_empty());
        assert!(w.verify(&poly("1 1\n")));
    }
}
