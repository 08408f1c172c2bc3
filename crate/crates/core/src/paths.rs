//! Admissible lattice paths for cd-words and their h-vector–weighted
//! generalization.
//!
//! A function `f : {0..n} → Z` is *admissible* for a degree-`n` word `w`
//! with multidegree `v` when all of the following hold:
//!
//! * endpoints and range: `f(0) = 0`, `f(n) = n`, and `0 ≤ f(i) ≤ i`;
//! * strict ascent where `v_i = 0`: `f(i-1) < f(i)`;
//! * weak descent where `v_i = 1`: `f(i-1) ≥ f(i)`;
//! * bound on descent where `v_i = 1` and `i > 1`:
//!   `f(i-1) - f(i) ≤ f(i-2) + 1`.
//!
//! The number of admissible functions for `w` equals the coefficient of `w`
//! in the cd-index of the boolean lattice of rank `n+1`. Weighting each
//! path by `h_{k+1}` parallel labels, where `k = f(n-1)`, generalizes the
//! count to any nonnegative h-vector with `h_0 = h_n = 1`.

use crate::cdindex::CdWord;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Errors from path validation and enumeration.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("path has {got} values but a degree-{degree} word needs {need}")]
    LengthMismatch { degree: usize, got: usize, need: usize },
    #[error("h-vector entries must be nonnegative, got {0}")]
    NegativeWeight(i64),
    #[error("h-vector has {got} entries but a degree-{degree} word needs {need}")]
    WeightLengthMismatch { degree: usize, got: usize, need: usize },
    #[error("a path needs at least one value")]
    EmptyPath,
    #[error("an h-vector needs at least one entry")]
    EmptyHVector,
    #[error("invalid path text {text:?}: {message}")]
    Parse { text: String, message: String },
}

/// Why a function fails the admissibility test for a word. Positions are
/// the 1-indexed step positions of the conditions above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdmissibilityViolation {
    /// `f(0) ≠ 0` or `f(n) ≠ n`.
    Endpoint { position: usize },
    /// `f(i) < 0` or `f(i) > i`.
    Range { position: usize },
    /// Letter demands `f(i-1) < f(i)` but the value does not rise.
    ExpectedAscent { position: usize },
    /// Letter demands `f(i-1) ≥ f(i)` but the value rises.
    ExpectedDescent { position: usize },
    /// The drop exceeds the bound on descent: `f(i-1) - f(i) > f(i-2) + 1`.
    DescentBound { position: usize },
}

impl fmt::Display for AdmissibilityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdmissibilityViolation::Endpoint { position } => {
                write!(f, "endpoint condition fails at position {position}")
            }
            AdmissibilityViolation::Range { position } => {
                write!(f, "range condition fails at position {position}")
            }
            AdmissibilityViolation::ExpectedAscent { position } => {
                write!(f, "strict ascent condition fails at position {position}")
            }
            AdmissibilityViolation::ExpectedDescent { position } => {
                write!(f, "weak descent condition fails at position {position}")
            }
            AdmissibilityViolation::DescentBound { position } => {
                write!(f, "bound on descent condition fails at position {position}")
            }
        }
    }
}

/// An integer value sequence `f(0), …, f(n)`. Arbitrary sequences may be
/// wrapped; admissibility relative to a word is a separate check.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathFunction {
    values: Vec<i64>,
}

impl PathFunction {
    pub fn new(values: Vec<i64>) -> Result<Self, PathError> {
        if values.is_empty() {
            return Err(PathError::EmptyPath);
        }
        Ok(PathFunction { values })
    }

    /// The identity path `f(i) = i` on `{0..n}`.
    pub fn identity(n: usize) -> Self {
        PathFunction {
            values: (0..=n as i64).collect(),
        }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `n` for a path on `{0..n}`.
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, i: usize) -> i64 {
        self.values[i]
    }

    /// `supp(f) = {i | f(i) < i}`; never contains 0 or `n` for functions
    /// admissible for any word.
    pub fn support(&self) -> BTreeSet<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v < i as i64)
            .map(|(i, _)| i)
            .collect()
    }

    /// Pointwise minimum; the sequences must have equal length.
    pub fn min_with(&self, other: &PathFunction) -> Option<PathFunction> {
        if self.values.len() != other.values.len() {
            return None;
        }
        Some(PathFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        })
    }
}

impl fmt::Display for PathFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for PathFunction {
    type Err = PathError;

    /// Parses `(0,1,0,2,2,3,6)`.
    fn from_str(s: &str) -> Result<Self, PathError> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| PathError::Parse {
                text: s.to_string(),
                message: "expected parentheses".into(),
            })?;
        let mut values = Vec::new();
        for tok in inner.split(',') {
            let v: i64 = tok.trim().parse().map_err(|_| PathError::Parse {
                text: s.to_string(),
                message: format!("invalid integer {tok:?}"),
            })?;
            values.push(v);
        }
        PathFunction::new(values)
    }
}

/// A path together with a positive multiplicity label. For a path with
/// `k = f(n-1)`, valid labels run over `1..=h_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledPath {
    pub path: PathFunction,
    pub label: i64,
}

impl fmt::Display for LabeledPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.path, self.label)
    }
}

/// A nonnegative integer vector `h_0, …, h_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    entries: Vec<i64>,
}

impl HVector {
    pub fn new(entries: Vec<i64>) -> Result<Self, PathError> {
        if entries.is_empty() {
            return Err(PathError::EmptyHVector);
        }
        if let Some(&bad) = entries.iter().find(|&&e| e < 0) {
            return Err(PathError::NegativeWeight(bad));
        }
        Ok(HVector { entries })
    }

    /// The all-ones h-vector of length `n+1` (boolean lattice case).
    pub fn ones(n: usize) -> Self {
        HVector {
            entries: vec![1; n + 1],
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> i64 {
        self.entries[i]
    }

    /// `n` for entries `h_0..h_n`.
    pub fn n(&self) -> usize {
        self.entries.len() - 1
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Checks `f` against the four conditions for `w` and reports the first
/// violation in position order, or `None` when `f` is admissible.
/// Length mismatches are an error, not a violation.
pub fn admissibility_violation(
    f: &PathFunction,
    w: &CdWord,
) -> Result<Option<AdmissibilityViolation>, PathError> {
    let n = w.degree();
    if f.values().len() != n + 1 {
        return Err(PathError::LengthMismatch {
            degree: n,
            got: f.values().len(),
            need: n + 1,
        });
    }
    if f.get(0) != 0 {
        return Ok(Some(AdmissibilityViolation::Endpoint { position: 0 }));
    }
    if f.get(n) != n as i64 {
        return Ok(Some(AdmissibilityViolation::Endpoint { position: n }));
    }
    let v = w.mdeg();
    for i in 1..=n {
        let cur = f.get(i);
        if cur < 0 || cur > i as i64 {
            return Ok(Some(AdmissibilityViolation::Range { position: i }));
        }
        let prev = f.get(i - 1);
        if v.entries()[i - 1] == 0 {
            if prev >= cur {
                return Ok(Some(AdmissibilityViolation::ExpectedAscent { position: i }));
            }
        } else {
            if prev < cur {
                return Ok(Some(AdmissibilityViolation::ExpectedDescent { position: i }));
            }
            if i > 1 && prev - cur > f.get(i - 2) + 1 {
                return Ok(Some(AdmissibilityViolation::DescentBound { position: i }));
            }
        }
    }
    Ok(None)
}

/// True iff `f` is admissible for `w`.
pub fn is_admissible(f: &PathFunction, w: &CdWord) -> Result<bool, PathError> {
    Ok(admissibility_violation(f, w)?.is_none())
}

/// All admissible functions for `w`, duplicate-free, in lexicographic order
/// of value sequences. Depth-first over positions `1..n-1` with the local
/// constraints pruning every branch, so no post-filtering is needed.
pub fn enumerate_admissible(w: &CdWord) -> Vec<PathFunction> {
    let n = w.degree();
    if n == 0 {
        return vec![PathFunction::new(vec![0]).unwrap()];
    }
    let v: Vec<u8> = w.mdeg().entries().to_vec();
    let mut out = Vec::new();
    let mut values = vec![0i64; n + 1];
    values[n] = n as i64;

    fn extend(
        v: &[u8],
        n: usize,
        i: usize,
        values: &mut Vec<i64>,
        out: &mut Vec<PathFunction>,
    ) {
        if i == n {
            // Position n always demands a strict ascent (no word's
            // multidegree ends in 1) and f(n-1) ≤ n-1 < n guarantees it.
            debug_assert!(values[n - 1] < n as i64);
            out.push(PathFunction::new(values.clone()).unwrap());
            return;
        }
        let prev = values[i - 1];
        let (lo, hi);
        if v[i - 1] == 0 {
            // Strict ascent: f(i-1) < f(i) ≤ i.
            lo = prev + 1;
            hi = i as i64;
        } else {
            // Weak descent with the bound on descent below it.
            hi = prev;
            lo = if i > 1 { (prev - values[i - 2] - 1).max(0) } else { 0 };
        }
        for val in lo..=hi {
            values[i] = val;
            extend(v, n, i + 1, values, out);
        }
    }

    extend(&v, n, 1, &mut values, &mut out);
    out
}

/// Every admissible path for `w` paired with labels `1..=h_{k+1}` where
/// `k = f(n-1)`; the total count is `Σ_f h_{f(n-1)+1}`. For the degree-0
/// word the unit path carries the single label 1.
pub fn enumerate_weighted(w: &CdWord, h: &HVector) -> Result<Vec<LabeledPath>, PathError> {
    let n = w.degree();
    if h.entries().len() != n + 1 {
        return Err(PathError::WeightLengthMismatch {
            degree: n,
            got: h.entries().len(),
            need: n + 1,
        });
    }
    if n == 0 {
        return Ok(vec![LabeledPath {
            path: PathFunction::new(vec![0]).unwrap(),
            label: 1,
        }]);
    }
    let mut out = Vec::new();
    for path in enumerate_admissible(w) {
        let k = path.get(n - 1);
        let weight = h.get(k as usize + 1);
        for label in 1..=weight {
            out.push(LabeledPath {
                path: path.clone(),
                label,
            });
        }
    }
    Ok(out)
}
