//! Simplicial complexes on up to 64 vertices: face counting, h- and
//! g-vectors, flag vectors, the face poset, a sphere sanity check, and a
//! backtracking shelling search.
//!
//! Facets are stored as vertex bitmasks. A complex is *pure* when all
//! facets have the same size `n`; the f-vector counts faces by vertex
//! count (with `f_0 = 1` for the empty face), and the h-vector is the
//! coefficient list of `Σ_i f_i (t-1)^{n-i}`. A shelling is a facet order
//! in which every facet meets the union of its predecessors in a nonempty
//! union of its own ridges; the sizes of the restriction faces along a
//! shelling recover the h-vector by counting.

use crate::paths::HVector;
use crate::poset::{FlagVector, GradedPoset, PosetError};
use crate::util::binomial;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Default node budget for the backtracking shelling search.
pub const DEFAULT_SHELLING_BUDGET: u64 = 10_000_000;

/// Errors from complex construction and the derived invariants.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("a complex needs at least one facet")]
    NoFacets,
    #[error("facet {facet_index} is empty")]
    EmptyFacet { facet_index: usize },
    #[error("at most 64 vertices are supported, got {got}")]
    TooManyVertices { got: usize },
    #[error("facet {facet_index} repeats vertex {vertex}")]
    DuplicateVertex { facet_index: usize, vertex: usize },
    #[error("vertex {vertex} is out of range for {num_vertices} vertices")]
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    #[error("vertex {vertex} lies in no facet")]
    UnusedVertex { vertex: usize },
    #[error("facet {inner} is contained in facet {outer}")]
    FacetContained { inner: usize, outer: usize },
    #[error("operation needs a pure complex (all facets of equal size)")]
    NotPure,
    #[error("an f-vector must start with 1, got {0}")]
    FirstEntryNotOne(i64),
    #[error("face counts must be nonnegative, got {0}")]
    NegativeCount(i64),
    #[error("an f-vector needs at least one entry")]
    EmptyFVector,
    #[error("h-vector entry {index} is negative ({value}); the complex is not sphere-like")]
    NegativeH { index: usize, value: i64 },
    #[error("h-to-f conversion needs h_n = 1, got {0}")]
    LastEntryNotOne(i64),
    #[error("restriction size {size} exceeds the facet size {n}")]
    RestrictionTooLarge { size: usize, n: usize },
    #[error("flag count overflow")]
    Overflow,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Face counts by vertex count: `f_i` is the number of faces with `i`
/// vertices, so `f_0 = 1` for the empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    counts: Vec<i64>,
}

impl FVector {
    pub fn new(counts: Vec<i64>) -> Result<Self, SimplicialError> {
        if counts.is_empty() {
            return Err(SimplicialError::EmptyFVector);
        }
        if counts[0] != 1 {
            return Err(SimplicialError::FirstEntryNotOne(counts[0]));
        }
        if let Some(&bad) = counts.iter().find(|&&c| c < 0) {
            return Err(SimplicialError::NegativeCount(bad));
        }
        Ok(FVector { counts })
    }

    /// `n` for entries `f_0..f_n`.
    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, i: usize) -> i64 {
        self.counts[i]
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The difference sequence `g_0 = 1`, `g_i = h_i - h_{i-1}` up to `⌊n/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GVector {
    entries: Vec<i64>,
}

impl GVector {
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> i64 {
        self.entries[i]
    }
}

impl fmt::Display for GVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A simplicial complex given by its facets, on at most 64 vertices.
/// Every vertex must lie in some facet and no facet may contain another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_names: Vec<String>,
    facets: Vec<u64>,
}

impl SimplicialComplex {
    /// Builds a complex from facets given as vertex index lists; vertex
    /// `i` is named by its index.
    pub fn new(num_vertices: usize, facets: Vec<Vec<usize>>) -> Result<Self, SimplicialError> {
        let names = (0..num_vertices).map(|v| v.to_string()).collect();
        SimplicialComplex::with_names(names, facets)
    }

    /// As `new`, with explicit vertex names.
    pub fn with_names(
        vertex_names: Vec<String>,
        facets: Vec<Vec<usize>>,
    ) -> Result<Self, SimplicialError> {
        let num_vertices = vertex_names.len();
        if num_vertices > 64 {
            return Err(SimplicialError::TooManyVertices { got: num_vertices });
        }
        if facets.is_empty() {
            return Err(SimplicialError::NoFacets);
        }
        let mut masks = Vec::with_capacity(facets.len());
        for (facet_index, facet) in facets.iter().enumerate() {
            if facet.is_empty() {
                return Err(SimplicialError::EmptyFacet { facet_index });
            }
            let mut mask = 0u64;
            for &vertex in facet {
                if vertex >= num_vertices {
                    return Err(SimplicialError::VertexOutOfRange {
                        vertex,
                        num_vertices,
                    });
                }
                if mask & (1 << vertex) != 0 {
                    return Err(SimplicialError::DuplicateVertex {
                        facet_index,
                        vertex,
                    });
                }
                mask |= 1 << vertex;
            }
            masks.push(mask);
        }
        let used = masks.iter().fold(0u64, |a, &m| a | m);
        for vertex in 0..num_vertices {
            if used & (1 << vertex) == 0 {
                return Err(SimplicialError::UnusedVertex { vertex });
            }
        }
        for i in 0..masks.len() {
            for j in 0..masks.len() {
                if i != j && masks[i] & !masks[j] == 0 {
                    return Err(SimplicialError::FacetContained { inner: i, outer: j });
                }
            }
        }
        Ok(SimplicialComplex {
            vertex_names,
            facets: masks,
        })
    }

    /// Parses one facet per line, vertices as whitespace-separated tokens;
    /// `#` starts a comment. Tokens are numbered in order of first
    /// appearance.
    pub fn from_text(text: &str) -> Result<Self, SimplicialError> {
        let mut names: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut facet = Vec::new();
            for token in line.split_whitespace() {
                let v = *index.entry(token.to_string()).or_insert_with(|| {
                    names.push(token.to_string());
                    names.len() - 1
                });
                if facet.contains(&v) {
                    return Err(SimplicialError::Parse {
                        line: lineno + 1,
                        message: format!("vertex {token:?} repeated in facet"),
                    });
                }
                facet.push(v);
            }
            facets.push(facet);
        }
        if names.len() > 64 {
            return Err(SimplicialError::TooManyVertices { got: names.len() });
        }
        SimplicialComplex::with_names(names, facets)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertex_names[v]
    }

    pub fn is_pure(&self) -> bool {
        let first = self.facets[0].count_ones();
        self.facets.iter().all(|m| m.count_ones() == first)
    }

    /// Vertices per facet for a pure complex (`n`): the complex has
    /// dimension `n-1`.
    pub fn facet_size(&self) -> Result<usize, SimplicialError> {
        if !self.is_pure() {
            return Err(SimplicialError::NotPure);
        }
        Ok(self.facets[0].count_ones() as usize)
    }

    /// Every face as a bitmask, including the empty face.
    pub fn faces(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for &facet in &self.facets {
            let mut sub = facet;
            loop {
                out.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & facet;
            }
        }
        out
    }

    /// The boundary of the `m`-simplex: all `m`-subsets of `m+1` vertices.
    pub fn simplex_boundary(m: usize) -> Result<Self, SimplicialError> {
        if m == 0 {
            return Err(SimplicialError::NoFacets);
        }
        let facets = (0..=m)
            .map(|skip| (0..=m).filter(|&v| v != skip).collect())
            .collect();
        SimplicialComplex::new(m + 1, facets)
    }

    /// The boundary of the `d`-dimensional cross-polytope: vertices
    /// `2i, 2i+1` are antipodal and each facet picks one from every pair.
    pub fn cross_polytope(d: usize) -> Result<Self, SimplicialError> {
        if d == 0 {
            return Err(SimplicialError::NoFacets);
        }
        if 2 * d > 64 {
            return Err(SimplicialError::TooManyVertices { got: 2 * d });
        }
        let facets = (0..1u64 << d)
            .map(|signs| {
                (0..d)
                    .map(|i| 2 * i + ((signs >> i) & 1) as usize)
                    .collect()
            })
            .collect();
        SimplicialComplex::new(2 * d, facets)
    }

    /// The octahedron boundary.
    pub fn octahedron() -> Self {
        SimplicialComplex::cross_polytope(3).expect("three pairs of vertices")
    }

    /// The bipyramid over a `k`-gon (`k ≥ 3`): cycle vertices `0..k` and
    /// apexes `k`, `k+1`.
    pub fn bipyramid(k: usize) -> Result<Self, SimplicialError> {
        if k < 3 {
            return Err(SimplicialError::NoFacets);
        }
        if k + 2 > 64 {
            return Err(SimplicialError::TooManyVertices { got: k + 2 });
        }
        let mut facets = Vec::new();
        for i in 0..k {
            let j = (i + 1) % k;
            facets.push(vec![i, j, k]);
            facets.push(vec![i, j, k + 1]);
        }
        SimplicialComplex::new(k + 2, facets)
    }

    /// The icosahedron boundary: apexes 0 and 11, upper pentagon 1..=5,
    /// lower pentagon 6..=10.
    pub fn icosahedron() -> Self {
        let mut facets = Vec::new();
        for i in 0..5 {
            let u = 1 + i;
            let un = 1 + (i + 1) % 5;
            let w = 6 + i;
            let wn = 6 + (i + 1) % 5;
            facets.push(vec![0, u, un]);
            facets.push(vec![u, un, w]);
            facets.push(vec![w, wn, un]);
            facets.push(vec![11, w, wn]);
        }
        SimplicialComplex::new(12, facets).expect("a fixed valid facet list")
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for mask in &self.facets {
            let mut first = true;
            for v in 0..self.vertex_names.len() {
                if mask & (1 << v) != 0 {
                    if !first {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", self.vertex_names[v])?;
                    first = false;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Counts faces by vertex count; the complex must be pure.
pub fn f_vector(complex: &SimplicialComplex) -> Result<FVector, SimplicialError> {
    let n = complex.facet_size()?;
    let mut counts = vec![0i64; n + 1];
    for face in complex.faces() {
        counts[face.count_ones() as usize] += 1;
    }
    FVector::new(counts)
}

/// The coefficient list of `Σ_i f_i (t-1)^{n-i}`. Errors when some entry
/// comes out negative, which no sphere-like complex produces.
pub fn h_vector(f: &FVector) -> Result<HVector, SimplicialError> {
    let n = f.n();
    let mut entries = vec![0i64; n + 1];
    for (j, entry) in entries.iter_mut().enumerate() {
        for i in 0..=n {
            if i + j > n {
                continue;
            }
            let sign = if (n - i - j) % 2 == 0 { 1 } else { -1 };
            *entry += f.get(i) * binomial(n - i, j) * sign;
        }
    }
    if let Some((index, &value)) = entries.iter().enumerate().find(|(_, &v)| v < 0) {
        return Err(SimplicialError::NegativeH { index, value });
    }
    HVector::new(entries).map_err(|_| SimplicialError::EmptyFVector)
}

/// Inverts `h_vector`: `f_i = Σ_j h_j C(j, n-i)`. Needs `h_n = 1` so that
/// `f_0 = 1`.
pub fn f_from_h(h: &HVector) -> Result<FVector, SimplicialError> {
    let n = h.n();
    if h.get(n) != 1 {
        return Err(SimplicialError::LastEntryNotOne(h.get(n)));
    }
    let counts = (0..=n)
        .map(|i| (0..=n).map(|j| h.get(j) * binomial(j, n - i)).sum())
        .collect();
    FVector::new(counts)
}

/// `g_0 = 1` and `g_i = h_i - h_{i-1}` for `1 ≤ i ≤ ⌊n/2⌋`.
pub fn g_vector(h: &HVector) -> GVector {
    let n = h.n();
    let mut entries = vec![1i64];
    for i in 1..=n / 2 {
        entries.push(h.get(i) - h.get(i - 1));
    }
    GVector { entries }
}

/// The flag vector determined by face counts alone: for
/// `S = {s_1 < … < s_k}`, counts chains of nested faces of those sizes as
/// `f_S = N_{s_k} · Π_j C(s_{j+1}, s_j)`, using that every subset of a
/// face is a face.
pub fn flag_from_face_counts(f: &FVector) -> Result<FlagVector, SimplicialError> {
    let n = f.n();
    let mut counts = Vec::with_capacity(1 << n);
    for mask in 0..1u32 << n {
        let sizes: Vec<usize> = (1..=n).filter(|&s| mask >> (s - 1) & 1 == 1).collect();
        let mut value: i64 = match sizes.last() {
            None => 1,
            Some(&top) => f.get(top),
        };
        for pair in sizes.windows(2) {
            value = value
                .checked_mul(binomial(pair[1], pair[0]))
                .ok_or(SimplicialError::Overflow)?;
        }
        counts.push(value);
    }
    Ok(FlagVector::new(n, counts)?)
}

/// The flag vector of a pure complex's face poset, via the closed-form
/// chain count.
pub fn flag_from_f(complex: &SimplicialComplex) -> Result<FlagVector, SimplicialError> {
    flag_from_face_counts(&f_vector(complex)?)
}

/// The face poset of a pure complex with the empty face at rank 0 and a
/// formal maximum above the facets, as a graded poset of rank `n+1`.
pub fn face_poset(complex: &SimplicialComplex) -> Result<GradedPoset, SimplicialError> {
    let n = complex.facet_size()?;
    let faces = complex.faces();
    let mut ordered: Vec<u64> = faces.iter().copied().collect();
    ordered.sort_by_key(|&m| (m.count_ones(), m));
    let index: BTreeMap<u64, usize> = ordered
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i))
        .collect();
    let top = ordered.len();
    let mut ranks: Vec<usize> = ordered
        .iter()
        .map(|&m| m.count_ones() as usize)
        .collect();
    ranks.push(n + 1);
    let mut covers = Vec::new();
    for &mask in &ordered {
        if mask == 0 {
            continue;
        }
        let i = index[&mask];
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            covers.push((index[&(mask & !(1u64 << v))], i));
        }
        if mask.count_ones() as usize == n {
            covers.push((i, top));
        }
    }
    Ok(GradedPoset::new(ranks, covers)?)
}

/// True when the complex has the Euler characteristic of an
/// `(n-1)`-sphere and every ridge lies in exactly two facets. Both are
/// necessary (not sufficient) for being a homology sphere; passing this
/// check gates the cd-index pipeline.
pub fn euler_check(complex: &SimplicialComplex) -> Result<bool, SimplicialError> {
    let n = complex.facet_size()?;
    let f = f_vector(complex)?;
    let mut chi = 0i64;
    for i in 1..=n {
        let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };
        chi += sign * f.get(i);
    }
    let sphere_chi = 1 + if (n - 1) % 2 == 0 { 1 } else { -1 };
    if chi != sphere_chi {
        return Ok(false);
    }
    let mut ridge_count: BTreeMap<u64, u32> = BTreeMap::new();
    for &facet in complex.facet_masks() {
        let mut rest = facet;
        if n == 1 {
            *ridge_count.entry(0).or_insert(0) += 1;
            continue;
        }
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            *ridge_count.entry(facet & !(1u64 << v)).or_insert(0) += 1;
        }
    }
    Ok(ridge_count.values().all(|&c| c == 2))
}

/// Outcome of the shelling search: a shelling with its restriction-face
/// sizes, a definitive refusal, or an exhausted node budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShellingSearch {
    Found {
        /// Facet indices in shelling order.
        order: Vec<usize>,
        /// `|R_j|` for each step: the vertices of facet `j` whose
        /// opposite ridge already lies in the union of earlier facets
        /// (0 for the first facet).
        restriction_sizes: Vec<usize>,
    },
    NotShellable,
    Exhausted,
}

/// Backtracking shelling search with the default node budget.
pub fn find_shelling(complex: &SimplicialComplex) -> Result<ShellingSearch, SimplicialError> {
    find_shelling_bounded(complex, DEFAULT_SHELLING_BUDGET)
}

/// Backtracking search over facet orders. A facet `F` may extend a
/// partial shelling when its restriction `R` (vertices whose opposite
/// ridge is covered by an earlier facet) is nonempty and every earlier
/// facet `G` satisfies `(F \ G) ∩ R ≠ ∅`, which makes the intersection
/// with the earlier union exactly the ridges opposite `R`. Every facet is
/// tried as the first. Each partial order extension costs one node.
pub fn find_shelling_bounded(
    complex: &SimplicialComplex,
    budget: u64,
) -> Result<ShellingSearch, SimplicialError> {
    if !complex.is_pure() {
        return Err(SimplicialError::NotPure);
    }
    let facets = complex.facet_masks();
    let mut state = SearchState {
        facets,
        used: Vec::new(),
        in_use: vec![false; facets.len()],
        sizes: Vec::new(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    if extend(&mut state) {
        return Ok(ShellingSearch::Found {
            order: state.used,
            restriction_sizes: state.sizes,
        });
    }
    if state.exhausted {
        Ok(ShellingSearch::Exhausted)
    } else {
        Ok(ShellingSearch::NotShellable)
    }
}

struct SearchState<'a> {
    facets: &'a [u64],
    used: Vec<usize>,
    in_use: Vec<bool>,
    sizes: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

/// The restriction of `facet` against the already-used facets, as a
/// vertex mask, when the facet is a valid next step; `None` otherwise.
fn step_restriction(facet: u64, used: &[u64]) -> Option<u64> {
    let mut restriction = 0u64;
    let mut rest = facet;
    while rest != 0 {
        let bit = 1u64 << rest.trailing_zeros();
        rest &= rest - 1;
        let ridge = facet & !bit;
        if used.iter().any(|&g| ridge & !g == 0) {
            restriction |= bit;
        }
    }
    if restriction == 0 {
        return None;
    }
    if used.iter().any(|&g| facet & !g & restriction == 0) {
        return None;
    }
    Some(restriction)
}

fn extend(state: &mut SearchState<'_>) -> bool {
    if state.used.len() == state.facets.len() {
        return true;
    }
    for candidate in 0..state.facets.len() {
        if state.in_use[candidate] || state.exhausted {
            continue;
        }
        let facet = state.facets[candidate];
        let restriction = if state.used.is_empty() {
            Some(0u64)
        } else {
            let used_masks: Vec<u64> =
                state.used.iter().map(|&i| state.facets[i]).collect();
            step_restriction(facet, &used_masks)
        };
        let Some(restriction) = restriction else {
            continue;
        };
        state.nodes += 1;
        if state.nodes > state.budget {
            state.exhausted = true;
            return false;
        }
        state.used.push(candidate);
        state.in_use[candidate] = true;
        state.sizes.push(restriction.count_ones() as usize);
        if extend(state) {
            return true;
        }
        state.sizes.pop();
        state.in_use[candidate] = false;
        state.used.pop();
    }
    false
}

/// Recovers the h-vector from the restriction sizes along a shelling:
/// `h_i` counts the steps whose restriction face has `i` vertices.
pub fn h_from_shelling(sizes: &[usize], n: usize) -> Result<HVector, SimplicialError> {
    let mut counts = vec![0i64; n + 1];
    for &size in sizes {
        if size > n {
            return Err(SimplicialError::RestrictionTooLarge { size, n });
        }
        counts[size] += 1;
    }
    Ok(HVector::new(counts).expect("nonnegative counts"))
}
