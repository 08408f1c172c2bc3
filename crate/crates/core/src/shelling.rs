//! Symbolic shelling calculus on product fans.
//!
//! Terms are products `Pi_k x sigma_l` (complete fan times cone, written
//! `Sigma`) and `Pi_k x Pi_l` (written `Pi`), both of dimension `k+l`. Two
//! rewrite operations act on multisets of terms:
//!
//! * `boundary` (∂): `Pi_k x Pi_l` and `Pi_k x sigma_0` vanish (sphere
//!   fans have empty boundary); `Pi_k x sigma_l` with `l ≥ 1` becomes
//!   `Pi_k x Pi_{l-1}`.
//! * `shell_c` (C): `Pi_k x sigma_l` becomes the multiset
//!   `{Pi_{i-1} x sigma_{k+l-i} : 1 ≤ i ≤ k}`, and `Pi_k x Pi_l` becomes
//!   `{Pi_{i+j-1} x sigma_{k+l-i-j} : 0 ≤ i ≤ k, 0 ≤ j ≤ l, (i,j) ≠ (0,0)}`.
//!
//! Every rewrite drops dimension by exactly one, so a word of operator
//! symbols applied rightmost-first to a term of equal dimension ends in
//! dimension 0; the number of terminal terms is the word's value. Words
//! obtained from cd-words by `c → C`, `d → ∂C` evaluate to cd-index
//! coefficients, and `trace_eval` replays every branch of the rewrite,
//! recovering the admissible path of each branch from the term numbers.

use crate::cdindex::CdWord;
use crate::paths::PathFunction;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Largest start dimension accepted by `trace_eval`; branch counts grow
/// like the largest cd-index coefficients and stay printable below this.
pub const MAX_TRACE_DIMENSION: usize = 12;

/// Errors from term rewriting and word evaluation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShellingError {
    #[error("cannot shell a 0-dimensional term")]
    DimensionZeroTerm,
    #[error("operator word has {word_len} symbols but the start term has dimension {dimension}")]
    WordLengthMismatch { word_len: usize, dimension: usize },
    #[error(
        "boundary symbol at position {position} must be the rightmost symbol \
         or have C immediately to its right"
    )]
    MisplacedBoundary { position: usize },
    #[error("invalid operator word {text:?}: {message}")]
    Parse { text: String, message: String },
    #[error("g-coefficient evaluation needs a word whose rightmost symbol is the boundary")]
    MissingRightmostBoundary,
    #[error("trace evaluation starts from a complete fan (sigma part of dimension 0)")]
    TraceStartNotComplete,
    #[error("trace dimension {got} exceeds the supported maximum {max}")]
    TraceTooLarge { got: usize, max: usize },
    #[error("term multiplicity overflow")]
    CountOverflow,
}

/// Whether the second factor of the product is a cone (`Sigma`, for
/// `Pi_k x sigma_l`) or a complete fan (`Pi`, for `Pi_k x Pi_l`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FanKind {
    Sigma,
    Pi,
}

/// A product-fan term of dimension `k + l`. `Pi_0 x Pi_0` is identified
/// with the terminal term `Pi_0 x sigma_0` at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FanTerm {
    kind: FanKind,
    k: usize,
    l: usize,
}

impl FanTerm {
    /// `Pi_k x sigma_l`.
    pub fn sigma(k: usize, l: usize) -> Self {
        FanTerm {
            kind: FanKind::Sigma,
            k,
            l,
        }
    }

    /// `Pi_k x Pi_l`; the 0-dimensional case collapses to the terminal
    /// `Pi_0 x sigma_0`.
    pub fn pi(k: usize, l: usize) -> Self {
        if k == 0 && l == 0 {
            FanTerm::sigma(0, 0)
        } else {
            FanTerm {
                kind: FanKind::Pi,
                k,
                l,
            }
        }
    }

    /// The complete fan `Pi_n` = `Pi_n x sigma_0`.
    pub fn complete(n: usize) -> Self {
        FanTerm::sigma(n, 0)
    }

    pub fn kind(&self) -> FanKind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn dimension(&self) -> usize {
        self.k + self.l
    }
}

impl fmt::Display for FanTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FanKind::Sigma => write!(f, "Pi_{} x sigma_{}", self.k, self.l),
            FanKind::Pi => write!(f, "Pi_{} x Pi_{}", self.k, self.l),
        }
    }
}

/// A multiset of fan terms with exact multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FanSum {
    terms: BTreeMap<FanTerm, u128>,
}

impl FanSum {
    pub fn new() -> Self {
        FanSum::default()
    }

    pub fn singleton(term: FanTerm) -> Self {
        let mut s = FanSum::new();
        s.insert(term, 1).expect("one term cannot overflow");
        s
    }

    pub fn insert(&mut self, term: FanTerm, count: u128) -> Result<(), ShellingError> {
        if count == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(term).or_insert(0);
        *slot = slot.checked_add(count).ok_or(ShellingError::CountOverflow)?;
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Distinct terms with their multiplicities.
    pub fn terms(&self) -> impl Iterator<Item = (&FanTerm, u128)> {
        self.terms.iter().map(|(t, &c)| (t, c))
    }

    pub fn multiplicity(&self, term: &FanTerm) -> u128 {
        self.terms.get(term).copied().unwrap_or(0)
    }

    /// Total multiplicity of 0-dimensional terms.
    pub fn terminal_count(&self) -> u128 {
        self.terms
            .iter()
            .filter(|(t, _)| t.dimension() == 0)
            .map(|(_, &c)| c)
            .sum()
    }
}

impl fmt::Display for FanSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c == 1 {
                write!(f, "{t}")?;
            } else {
                write!(f, "{c}*({t})")?;
            }
        }
        Ok(())
    }
}

/// The boundary operation: `Pi` terms and `Sigma` terms with `l = 0`
/// vanish; `Sigma(k, l ≥ 1)` becomes `Pi(k, l-1)`.
pub fn boundary(s: &FanSum) -> FanSum {
    let mut out = FanSum::new();
    for (term, count) in s.terms() {
        if term.kind == FanKind::Sigma && term.l >= 1 {
            out.insert(FanTerm::pi(term.k, term.l - 1), count)
                .expect("input multiplicities fit");
        }
    }
    out
}

/// One shelling step: replaces every term by the multiset of terms one
/// dimension lower described in the module documentation. Every input
/// term must have dimension at least 1.
pub fn shell_c(s: &FanSum) -> Result<FanSum, ShellingError> {
    let mut out = FanSum::new();
    for (term, count) in s.terms() {
        if term.dimension() == 0 {
            return Err(ShellingError::DimensionZeroTerm);
        }
        match term.kind {
            FanKind::Sigma => {
                for i in 1..=term.k {
                    out.insert(FanTerm::sigma(i - 1, term.k + term.l - i), count)?;
                }
            }
            FanKind::Pi => {
                for i in 0..=term.k {
                    for j in 0..=term.l {
                        if i == 0 && j == 0 {
                            continue;
                        }
                        out.insert(
                            FanTerm::sigma(i + j - 1, term.k + term.l - i - j),
                            count,
                        )?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// One operator symbol: a shelling step `C` or the boundary `∂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpSymbol {
    C,
    Boundary,
}

/// A word over `{C, ∂}`, applied rightmost symbol first. Every boundary
/// symbol must either be the rightmost symbol or have `C` immediately to
/// its right; other words are rejected at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpWord {
    symbols: Vec<OpSymbol>,
}

impl OpWord {
    pub fn new(symbols: Vec<OpSymbol>) -> Result<Self, ShellingError> {
        for (pos, pair) in symbols.windows(2).enumerate() {
            if pair[0] == OpSymbol::Boundary && pair[1] != OpSymbol::C {
                return Err(ShellingError::MisplacedBoundary { position: pos });
            }
        }
        Ok(OpWord { symbols })
    }

    pub fn symbols(&self) -> &[OpSymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// True when the rightmost (first-applied) symbol is the boundary.
    pub fn ends_in_boundary(&self) -> bool {
        self.symbols.last() == Some(&OpSymbol::Boundary)
    }
}

impl fmt::Display for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            match s {
                OpSymbol::C => write!(f, "C")?,
                OpSymbol::Boundary => write!(f, "∂")?,
            }
        }
        Ok(())
    }
}

impl FromStr for OpWord {
    type Err = ShellingError;

    /// Parses words over `C` and `B` (or `∂`), e.g. `CBCBCC`.
    fn from_str(s: &str) -> Result<Self, ShellingError> {
        let mut symbols = Vec::new();
        for ch in s.trim().chars() {
            match ch {
                'C' => symbols.push(OpSymbol::C),
                'B' | '∂' => symbols.push(OpSymbol::Boundary),
                other => {
                    return Err(ShellingError::Parse {
                        text: s.to_string(),
                        message: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
        OpWord::new(symbols)
    }
}

/// The operator word of a cd-word: `c → C` and `d → ∂C`, left to right.
pub fn opword_from_cd(w: &CdWord) -> OpWord {
    let mut symbols = Vec::new();
    for letter in w.letters() {
        match letter {
            crate::cdindex::CdLetter::C => symbols.push(OpSymbol::C),
            crate::cdindex::CdLetter::D => {
                symbols.push(OpSymbol::Boundary);
                symbols.push(OpSymbol::C);
            }
        }
    }
    OpWord::new(symbols).expect("every boundary is followed by C")
}

/// Applies `w` rightmost-first to `start` and returns the number of
/// 0-dimensional terms. The word length must equal the start dimension.
pub fn eval_word(w: &OpWord, start: &FanTerm) -> Result<u128, ShellingError> {
    if w.len() != start.dimension() {
        return Err(ShellingError::WordLengthMismatch {
            word_len: w.len(),
            dimension: start.dimension(),
        });
    }
    let mut sum = FanSum::singleton(*start);
    for symbol in w.symbols().iter().rev() {
        sum = match symbol {
            OpSymbol::C => shell_c(&sum)?,
            OpSymbol::Boundary => boundary(&sum),
        };
    }
    Ok(sum.terminal_count())
}

/// As `eval_word`, for words whose rightmost symbol is the boundary;
/// these extract g-style coefficients and are 0 on complete-fan starts.
pub fn eval_g_part(w: &OpWord, start: &FanTerm) -> Result<u128, ShellingError> {
    if !w.ends_in_boundary() {
        return Err(ShellingError::MissingRightmostBoundary);
    }
    eval_word(w, start)
}

/// One recorded choice in a trace branch: shelling a `Sigma` term records
/// the base dimension `i-1` of the chosen piece; shelling a `Pi` term
/// records the chosen index pair `(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Choice {
    Base(usize),
    Pair(usize, usize),
}

impl fmt::Display for Choice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Choice::Base(b) => write!(f, "({b})"),
            Choice::Pair(i, j) => write!(f, "({i},{j})"),
        }
    }
}

/// One terminal branch of a traced evaluation: the choices made at each
/// `C` step and the path read off from the term numbers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TraceBranch {
    pub choices: Vec<Choice>,
    pub path: PathFunction,
}

impl fmt::Display for TraceBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.choices.is_empty() {
            write!(f, "- -> {}", self.path)
        } else {
            for (i, c) in self.choices.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, " -> {}", self.path)
        }
    }
}

/// Replays every branch of evaluating `w` on the complete fan `Pi_n`
/// (`n` = word length), recording the `C`-step choices and the value
/// sequence: a `Sigma(k, l)` term of dimension `j` contributes `f(j) = k`,
/// and a `Pi(k, l)` term of dimension `j` consumed by a `C` step with
/// choice `(i, j')` contributes `f(j) = k + j'`. The resulting path set
/// is exactly the admissible path set of the corresponding cd-word.
pub fn trace_eval(w: &OpWord, start: &FanTerm) -> Result<Vec<TraceBranch>, ShellingError> {
    if start.kind() != FanKind::Sigma || start.l() != 0 {
        return Err(ShellingError::TraceStartNotComplete);
    }
    let n = start.dimension();
    if n > MAX_TRACE_DIMENSION {
        return Err(ShellingError::TraceTooLarge {
            got: n,
            max: MAX_TRACE_DIMENSION,
        });
    }
    if w.len() != n {
        return Err(ShellingError::WordLengthMismatch {
            word_len: w.len(),
            dimension: n,
        });
    }
    let application_order: Vec<OpSymbol> = w.symbols().iter().rev().copied().collect();
    let mut values: Vec<Option<i64>> = vec![None; n + 1];
    values[n] = Some(n as i64);
    let mut out = Vec::new();
    let mut choices = Vec::new();
    descend(
        &application_order,
        0,
        *start,
        &mut values,
        &mut choices,
        &mut out,
    );
    out.sort();
    Ok(out)
}

fn descend(
    symbols: &[OpSymbol],
    step: usize,
    term: FanTerm,
    values: &mut Vec<Option<i64>>,
    choices: &mut Vec<Choice>,
    out: &mut Vec<TraceBranch>,
) {
    let dim = term.dimension();
    if step == symbols.len() {
        debug_assert_eq!(dim, 0);
        let vals: Vec<i64> = values
            .iter()
            .map(|v| v.expect("every dimension was numbered"))
            .collect();
        out.push(TraceBranch {
            choices: choices.clone(),
            path: PathFunction::new(vals).expect("nonempty"),
        });
        return;
    }
    match symbols[step] {
        OpSymbol::Boundary => {
            if term.kind() == FanKind::Sigma && term.l() >= 1 {
                let next = FanTerm::pi(term.k(), term.l() - 1);
                // The 0-dimensional case collapses to the terminal Sigma
                // and is numbered now; other Pi terms are numbered when a
                // C step consumes them.
                let filled = next.kind() == FanKind::Sigma;
                if filled {
                    values[next.dimension()] = Some(next.k() as i64);
                }
                descend(symbols, step + 1, next, values, choices, out);
                if filled {
                    values[next.dimension()] = None;
                }
            }
        }
        OpSymbol::C => match term.kind() {
            FanKind::Sigma => {
                for i in 1..=term.k() {
                    let next = FanTerm::sigma(i - 1, term.k() + term.l() - i);
                    values[dim - 1] = Some((i - 1) as i64);
                    choices.push(Choice::Base(i - 1));
                    descend(symbols, step + 1, next, values, choices, out);
                    choices.pop();
                    values[dim - 1] = None;
                }
            }
            FanKind::Pi => {
                for i in 0..=term.k() {
                    for j in 0..=term.l() {
                        if i == 0 && j == 0 {
                            continue;
                        }
                        let next =
                            FanTerm::sigma(i + j - 1, term.k() + term.l() - i - j);
                        values[dim] = Some((term.k() + j) as i64);
                        values[dim - 1] = Some((i + j - 1) as i64);
                        choices.push(Choice::Pair(i, j));
                        descend(symbols, step + 1, next, values, choices, out);
                        choices.pop();
                        values[dim - 1] = None;
                        values[dim] = None;
                    }
                }
            }
        },
    }
}
