//! A standard multigraded algebra on labeled admissible paths.
//!
//! For an h-vector `h_0..h_n` with `h_0 = h_n = 1`, the algebra's basis at
//! each valid multidegree `v` is the weighted path enumeration for the
//! degree-`n` word with multidegree `v`. The product of two basis elements
//! is the pointwise minimum of their paths when the path supports are
//! disjoint, the multidegrees add to a valid multidegree, and the minimum
//! is admissible for the sum word; otherwise the product is zero. The
//! identity path is the unit.
//!
//! Every structural claim — commutativity, associativity, the unit law,
//! closure of nonzero products, and unique factorization into unit-degree
//! generators — is machine-checkable by exhaustive enumeration over the
//! basis.

use crate::cdindex::{CdWord, MultiDegree};
use crate::paths::{enumerate_weighted, is_admissible, HVector, LabeledPath, PathFunction};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Largest rank accepted by the algebra constructor; basis sizes and the
/// exhaustive verifiers grow too fast beyond it.
pub const MAX_ALGEBRA_RANK: usize = 10;

/// Errors from algebra construction and arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("algebra construction needs h_0 = h_n = 1, got h_0 = {h0} and h_n = {hn}")]
    UnnormalizedH { h0: i64, hn: i64 },
    #[error("rank {got} exceeds the supported maximum {max}")]
    RankTooLarge { got: usize, max: usize },
    #[error("{0} is not a basis element of this algebra")]
    NotABasisElement(String),
}

/// The multidegree determined by a path: entry `i` is 1 exactly when the
/// path weakly descends at step `i`.
fn multidegree_of_path(f: &PathFunction) -> MultiDegree {
    let v: Vec<u8> = (1..=f.n())
        .map(|i| u8::from(f.get(i - 1) >= f.get(i)))
        .collect();
    MultiDegree::new(v).expect("entries are 0 or 1 by construction")
}

/// Outcome of the exhaustive axiom check. `failures` is empty exactly when
/// every checked identity holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    /// Basis size per multidegree, in multidegree order.
    pub dimensions: Vec<(MultiDegree, usize)>,
    pub unit_products: usize,
    pub commutative_pairs: usize,
    pub nonzero_products: usize,
    pub associative_triples: usize,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_dimension(&self) -> usize {
        self.dimensions.iter().map(|(_, d)| d).sum()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "basis dimensions:")?;
        for (v, d) in &self.dimensions {
            writeln!(f, "  {v}: {d}")?;
        }
        writeln!(f, "total basis elements: {}", self.total_dimension())?;
        writeln!(f, "unit products checked: {}", self.unit_products)?;
        writeln!(f, "commutative pairs checked: {}", self.commutative_pairs)?;
        writeln!(f, "nonzero pair products: {}", self.nonzero_products)?;
        writeln!(f, "associative triples checked: {}", self.associative_triples)?;
        if self.failures.is_empty() {
            writeln!(f, "failures: none")
        } else {
            writeln!(f, "failures: {}", self.failures.len())?;
            for line in &self.failures {
                writeln!(f, "  {line}")?;
            }
            Ok(())
        }
    }
}

/// Outcome of the exhaustive unique-factorization check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    pub elements_checked: usize,
    pub tuples_examined: usize,
    pub failures: Vec<String>,
}

impl FactorizationReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for FactorizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "elements checked: {}", self.elements_checked)?;
        writeln!(f, "generator tuples examined: {}", self.tuples_examined)?;
        if self.failures.is_empty() {
            writeln!(f, "failures: none")
        } else {
            writeln!(f, "failures: {}", self.failures.len())?;
            for line in &self.failures {
                writeln!(f, "  {line}")?;
            }
            Ok(())
        }
    }
}

/// The multigraded algebra for one h-vector. Immutable after construction;
/// all operations are pure.
#[derive(Debug, Clone)]
pub struct MultiGradedAlgebra {
    n: usize,
    h: HVector,
    basis: BTreeMap<MultiDegree, Vec<LabeledPath>>,
}

impl MultiGradedAlgebra {
    /// Builds the algebra for `h`, which must start and end with 1.
    pub fn new(h: HVector) -> Result<Self, AlgebraError> {
        let n = h.n();
        if n > MAX_ALGEBRA_RANK {
            return Err(AlgebraError::RankTooLarge {
                got: n,
                max: MAX_ALGEBRA_RANK,
            });
        }
        if h.get(0) != 1 || h.get(n) != 1 {
            return Err(AlgebraError::UnnormalizedH {
                h0: h.get(0),
                hn: h.get(n),
            });
        }
        let mut basis = BTreeMap::new();
        for w in CdWord::words_of_degree(n) {
            let elems = enumerate_weighted(&w, &h).expect("matching lengths");
            basis.insert(w.mdeg(), elems);
        }
        Ok(MultiGradedAlgebra { n, h, basis })
    }

    /// The algebra with all weights 1, whose graded dimensions are the
    /// cd-index coefficients of the rank-`n+1` boolean lattice.
    pub fn boolean(n: usize) -> Result<Self, AlgebraError> {
        MultiGradedAlgebra::new(HVector::ones(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> &HVector {
        &self.h
    }

    /// The identity path with label 1.
    pub fn unit(&self) -> LabeledPath {
        LabeledPath {
            path: PathFunction::identity(self.n),
            label: 1,
        }
    }

    /// Basis elements at `v`; empty for invalid multidegrees.
    pub fn basis_at(&self, v: &MultiDegree) -> &[LabeledPath] {
        self.basis.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Size of the basis at `v`; 0 for invalid multidegrees.
    pub fn graded_dimension(&self, v: &MultiDegree) -> usize {
        self.basis_at(v).len()
    }

    /// The valid multidegrees, one per degree-`n` word.
    pub fn multidegrees(&self) -> impl Iterator<Item = &MultiDegree> {
        self.basis.keys()
    }

    /// Every basis element across all multidegrees.
    pub fn elements(&self) -> impl Iterator<Item = &LabeledPath> {
        self.basis.values().flatten()
    }

    pub fn contains(&self, b: &LabeledPath) -> bool {
        if b.path.values().len() != self.n + 1 {
            return false;
        }
        let v = multidegree_of_path(&b.path);
        self.basis_at(&v).contains(b)
    }

    fn require_member(&self, b: &LabeledPath) -> Result<MultiDegree, AlgebraError> {
        if !self.contains(b) {
            return Err(AlgebraError::NotABasisElement(b.to_string()));
        }
        Ok(multidegree_of_path(&b.path))
    }

    /// Product of two basis elements: the pointwise minimum path when the
    /// path supports are disjoint, the multidegrees add to a valid
    /// multidegree, and the minimum is admissible for the sum word;
    /// `None` (zero) otherwise. The result's label comes from the factor
    /// whose path support contains `n-1`; if neither qualifies, the label
    /// is 1. Operands outside this algebra's basis are an error.
    pub fn multiply(
        &self,
        b1: &LabeledPath,
        b2: &LabeledPath,
    ) -> Result<Option<LabeledPath>, AlgebraError> {
        let u = self.require_member(b1)?;
        let v = self.require_member(b2)?;
        let Some(sum) = u.checked_add(&v) else {
            return Ok(None);
        };
        let Some(word) = CdWord::from_mdeg(&sum) else {
            return Ok(None);
        };
        let s1 = b1.path.support();
        let s2 = b2.path.support();
        if !s1.is_disjoint(&s2) {
            return Ok(None);
        }
        let m = b1.path.min_with(&b2.path).expect("paths of equal length");
        if !is_admissible(&m, &word).expect("lengths match") {
            return Ok(None);
        }
        let label = if self.n >= 1 && s1.contains(&(self.n - 1)) {
            b1.label
        } else if self.n >= 1 && s2.contains(&(self.n - 1)) {
            b2.label
        } else {
            1
        };
        Ok(Some(LabeledPath { path: m, label }))
    }

    /// Splits a basis element at its weak-descent positions
    /// `l_1 < … < l_m` into generators of multidegrees `e_{l_1}..e_{l_m}`:
    /// factor `j` agrees with the element's path on `[l_j, l_{j+1}-1]`
    /// (the last on `[l_m, n]`) and is the identity elsewhere. The last
    /// factor carries the element's label, the rest carry 1. The unit
    /// factors into the empty list.
    pub fn factorize(&self, b: &LabeledPath) -> Result<Vec<LabeledPath>, AlgebraError> {
        let u = self.require_member(b)?;
        let descents = u.support();
        let n = self.n;
        let mut out = Vec::new();
        for (j, &l) in descents.iter().enumerate() {
            let hi = if j + 1 < descents.len() {
                descents[j + 1] - 1
            } else {
                n
            };
            let mut vals: Vec<i64> = (0..=n as i64).collect();
            for i in l..=hi {
                vals[i] = b.path.get(i);
            }
            let label = if j + 1 == descents.len() { b.label } else { 1 };
            out.push(LabeledPath {
                path: PathFunction::new(vals).expect("nonempty"),
                label,
            });
        }
        Ok(out)
    }

    fn multiply_all(&self, factors: &[&LabeledPath]) -> Result<Option<LabeledPath>, AlgebraError> {
        let mut acc = self.unit();
        for &f in factors {
            match self.multiply(&acc, f)? {
                Some(p) => acc = p,
                None => return Ok(None),
            }
        }
        Ok(Some(acc))
    }

    /// Exhaustively checks commutativity, the unit law, closure of nonzero
    /// products, and associativity over all basis triples whose
    /// multidegrees sum to a 0-1 vector (all other triples multiply to
    /// zero in every order, since overlapping multidegrees force
    /// overlapping path supports).
    pub fn verify_axioms(&self) -> AxiomReport {
        let mut report = AxiomReport {
            dimensions: self
                .basis
                .iter()
                .map(|(v, list)| (v.clone(), list.len()))
                .collect(),
            unit_products: 0,
            commutative_pairs: 0,
            nonzero_products: 0,
            associative_triples: 0,
            failures: Vec::new(),
        };
        let elems: Vec<(&MultiDegree, &LabeledPath)> = self
            .basis
            .iter()
            .flat_map(|(v, list)| list.iter().map(move |b| (v, b)))
            .collect();
        let unit = self.unit();

        for &(_, b) in &elems {
            report.unit_products += 2;
            match (self.multiply(&unit, b), self.multiply(b, &unit)) {
                (Ok(Some(ref l)), Ok(Some(ref r))) if l == b && r == b => {}
                other => report
                    .failures
                    .push(format!("unit law fails for {b}: {other:?}")),
            }
        }

        for (i, &(u, a)) in elems.iter().enumerate() {
            for &(v, b) in &elems[i..] {
                report.commutative_pairs += 1;
                let ab = self.multiply(a, b);
                let ba = self.multiply(b, a);
                if ab != ba {
                    report
                        .failures
                        .push(format!("commutativity fails for {a}, {b}"));
                    continue;
                }
                if let Ok(Some(ref p)) = ab {
                    report.nonzero_products += 1;
                    let expected = u.checked_add(v).filter(|s| s.is_valid());
                    let actual = multidegree_of_path(&p.path);
                    if !self.contains(p) || expected.as_ref() != Some(&actual) {
                        report
                            .failures
                            .push(format!("closure fails for {a} * {b} = {p}"));
                    }
                }
            }
        }

        for &(u, a) in &elems {
            for &(v, b) in &elems {
                let Some(uv) = u.checked_add(v) else { continue };
                for &(w, c) in &elems {
                    if uv.checked_add(w).is_none() {
                        continue;
                    }
                    report.associative_triples += 1;
                    let left = self
                        .multiply(a, b)
                        .and_then(|ab| match ab {
                            Some(p) => self.multiply(&p, c),
                            None => Ok(None),
                        });
                    let right = self
                        .multiply(b, c)
                        .and_then(|bc| match bc {
                            Some(p) => self.multiply(a, &p),
                            None => Ok(None),
                        });
                    if left != right {
                        report
                            .failures
                            .push(format!("associativity fails for {a}, {b}, {c}"));
                    }
                }
            }
        }
        report
    }

    /// For every basis element, searches all tuples of unit-multidegree
    /// generators (one from each `e_l` with `l` in the multidegree's
    /// support — by grading no other generator multiset can reach it) and
    /// checks that exactly one tuple multiplies to the element and that it
    /// is the tuple returned by `factorize`.
    pub fn verify_unique_factorization(&self) -> FactorizationReport {
        let mut report = FactorizationReport {
            elements_checked: 0,
            tuples_examined: 0,
            failures: Vec::new(),
        };
        for (v, list) in &self.basis {
            let support = v.support();
            let generator_lists: Vec<&[LabeledPath]> = support
                .iter()
                .map(|&l| {
                    let e = MultiDegree::unit(self.n, l).expect("support position in range");
                    self.basis_at(&e)
                })
                .collect();
            for b in list {
                report.elements_checked += 1;
                let expected = match self.factorize(b) {
                    Ok(fs) => fs,
                    Err(e) => {
                        report.failures.push(format!("factorize({b}) failed: {e}"));
                        continue;
                    }
                };
                match self.multiply_all(&expected.iter().collect::<Vec<_>>()) {
                    Ok(Some(ref p)) if p == b => {}
                    other => {
                        report.failures.push(format!(
                            "factorize({b}) does not multiply back: {other:?}"
                        ));
                        continue;
                    }
                }
                let mut matching: Vec<Vec<&LabeledPath>> = Vec::new();
                let mut stack: Vec<&LabeledPath> = Vec::new();
                search_tuples(
                    self,
                    &generator_lists,
                    0,
                    &mut stack,
                    b,
                    &mut matching,
                    &mut report.tuples_examined,
                );
                if matching.len() != 1 {
                    report.failures.push(format!(
                        "{} generator tuples multiply to {b}, expected exactly 1",
                        matching.len()
                    ));
                    continue;
                }
                let found: Vec<LabeledPath> =
                    matching[0].iter().map(|&p| p.clone()).collect();
                if found != expected {
                    report.failures.push(format!(
                        "unique tuple for {b} differs from its factorization"
                    ));
                }
            }
        }
        report
    }
}

fn search_tuples<'a>(
    algebra: &MultiGradedAlgebra,
    lists: &[&'a [LabeledPath]],
    depth: usize,
    stack: &mut Vec<&'a LabeledPath>,
    target: &LabeledPath,
    matching: &mut Vec<Vec<&'a LabeledPath>>,
    examined: &mut usize,
) {
    if depth == lists.len() {
        *examined += 1;
        if let Ok(Some(ref p)) = algebra.multiply_all(stack) {
            if p == target {
                matching.push(stack.clone());
            }
        }
        return;
    }
    for g in lists[depth] {
        stack.push(g);
        search_tuples(algebra, lists, depth + 1, stack, target, matching, examined);
        stack.pop();
    }
}
