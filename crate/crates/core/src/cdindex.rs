//! cd-words, multidegrees, h-tables, and the cd-index extraction.
//!
//! The h-table of a rank-`n+1` poset is the polynomial
//! `Σ_S h_S t^S = Σ_S f_S (t-1)^{S̄}` over subsets `S ⊆ {1..n}`. Every
//! degree-`n` word in the letters `c` (degree 1) and `d` (degree 2) expands
//! into such a polynomial by substituting `t_p + 1` for a `c` at position
//! `p` and `t_p + t_{p+1}` for a `d` at positions `p, p+1`. For Eulerian
//! input the h-table is an integer combination of word expansions; the
//! combination is recovered here by an exact linear solve and is the
//! cd-index.

use crate::exact::{solve_full_rank, SolveError};
use crate::poset::FlagVector;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Largest `n` accepted by [`cd_from_h`]; the dense `2^n × W(n)` solve
/// grows quickly beyond this. [`cd_from_h_bounded`] takes the bound as an
/// argument instead.
pub const DEFAULT_MAX_SOLVE_DEGREE: usize = 14;

/// Errors from cd-index computations and text parsing.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CdError {
    /// The h-table is not an integer combination of word expansions; this
    /// signals bad (non-Eulerian) input, not a numerical problem.
    #[error("h-table is not expressible in the cd basis: {0}")]
    NotCdExpressible(String),
    #[error("degree {degree} exceeds the solve bound {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("coefficient does not fit in 64 bits")]
    CoefficientOverflow,
    #[error("word of degree {got} cannot appear in a degree-{expected} polynomial")]
    WordDegreeMismatch { expected: usize, got: usize },
    #[error("multidegree entries must be 0 or 1, got {0}")]
    NotZeroOne(i64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// One letter of a cd-word: `c` has degree 1, `d` degree 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CdLetter {
    C,
    D,
}

/// A word in the noncommuting letters `c` and `d`. Ordering is
/// lexicographic with `c < d`, which coincides with string order on the
/// spelled-out form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CdWord {
    letters: Vec<CdLetter>,
}

impl CdWord {
    pub fn new(letters: Vec<CdLetter>) -> Self {
        CdWord { letters }
    }

    pub fn empty() -> Self {
        CdWord { letters: Vec::new() }
    }

    /// `c^n`.
    pub fn all_c(n: usize) -> Self {
        CdWord {
            letters: vec![CdLetter::C; n],
        }
    }

    pub fn letters(&self) -> &[CdLetter] {
        &self.letters
    }

    /// Total degree: each `c` counts 1, each `d` counts 2.
    pub fn degree(&self) -> usize {
        self.letters
            .iter()
            .map(|l| match l {
                CdLetter::C => 1,
                CdLetter::D => 2,
            })
            .sum()
    }

    /// The 0-1 vector obtained by replacing `c` with `0` and `d` with `10`.
    pub fn mdeg(&self) -> MultiDegree {
        let mut v = Vec::with_capacity(self.degree());
        for l in &self.letters {
            match l {
                CdLetter::C => v.push(0),
                CdLetter::D => {
                    v.push(1);
                    v.push(0);
                }
            }
        }
        MultiDegree { v }
    }

    /// Inverse of [`CdWord::mdeg`]: `Some` exactly when `v` has no adjacent
    /// ones and does not end in one.
    pub fn from_mdeg(v: &MultiDegree) -> Option<CdWord> {
        let entries = v.entries();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < entries.len() {
            if entries[i] == 0 {
                letters.push(CdLetter::C);
                i += 1;
            } else {
                if i + 1 >= entries.len() || entries[i + 1] != 0 {
                    return None;
                }
                letters.push(CdLetter::D);
                i += 2;
            }
        }
        Some(CdWord { letters })
    }

    /// All degree-`n` words in lexicographic order (`c < d`). The count
    /// follows `W(n) = W(n-1) + W(n-2)` with `W(0) = W(1) = 1`.
    pub fn words_of_degree(n: usize) -> Vec<CdWord> {
        let mut table: Vec<Vec<CdWord>> = Vec::with_capacity(n + 1);
        table.push(vec![CdWord::empty()]);
        if n == 0 {
            return table.pop().unwrap();
        }
        table.push(vec![CdWord::new(vec![CdLetter::C])]);
        for k in 2..=n {
            let mut words = Vec::with_capacity(table[k - 1].len() + table[k - 2].len());
            for w in &table[k - 1] {
                let mut letters = Vec::with_capacity(w.letters.len() + 1);
                letters.push(CdLetter::C);
                letters.extend_from_slice(&w.letters);
                words.push(CdWord { letters });
            }
            for w in &table[k - 2] {
                let mut letters = Vec::with_capacity(w.letters.len() + 1);
                letters.push(CdLetter::D);
                letters.extend_from_slice(&w.letters);
                words.push(CdWord { letters });
            }
            table.push(words);
        }
        table.pop().unwrap()
    }
}

impl fmt::Display for CdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            match l {
                CdLetter::C => write!(f, "c")?,
                CdLetter::D => write!(f, "d")?,
            }
        }
        Ok(())
    }
}

impl FromStr for CdWord {
    type Err = CdError;

    fn from_str(s: &str) -> Result<Self, CdError> {
        if s == "1" {
            return Ok(CdWord::empty());
        }
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                'c' => letters.push(CdLetter::C),
                'd' => letters.push(CdLetter::D),
                other => {
                    return Err(CdError::Parse {
                        line: 0,
                        message: format!("invalid character {other:?} in cd-word"),
                    })
                }
            }
        }
        if letters.is_empty() {
            return Err(CdError::Parse {
                line: 0,
                message: "empty cd-word (spell the degree-0 word as \"1\")".into(),
            });
        }
        Ok(CdWord { letters })
    }
}

/// A 0-1 vector of length `n`. It is the multidegree of a cd-word exactly
/// when no two adjacent entries are 1 and the last entry is 0; other 0-1
/// vectors are permitted as values, and coefficient lookups treat them as 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiDegree {
    v: Vec<u8>,
}

impl MultiDegree {
    pub fn new(v: Vec<u8>) -> Result<Self, CdError> {
        if let Some(&bad) = v.iter().find(|&&e| e > 1) {
            return Err(CdError::NotZeroOne(bad as i64));
        }
        Ok(MultiDegree { v })
    }

    /// The all-zero vector (multidegree of `c^n`).
    pub fn zero(n: usize) -> Self {
        MultiDegree { v: vec![0; n] }
    }

    /// The unit vector `e_i` (1-indexed, `1 ≤ i ≤ n`).
    pub fn unit(n: usize, i: usize) -> Result<Self, CdError> {
        if i == 0 || i > n {
            return Err(CdError::Parse {
                line: 0,
                message: format!("unit position {i} out of range 1..={n}"),
            });
        }
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Ok(MultiDegree { v })
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.v.iter().all(|&e| e == 0)
    }

    /// True when this vector is the multidegree of some cd-word: no two
    /// adjacent ones and the final entry zero.
    pub fn is_valid(&self) -> bool {
        for i in 0..self.v.len() {
            if self.v[i] == 1 {
                if i + 1 == self.v.len() {
                    return false;
                }
                if self.v[i + 1] == 1 {
                    return false;
                }
            }
        }
        true
    }

    /// Entrywise sum while the result stays 0-1; `None` otherwise.
    pub fn checked_add(&self, other: &MultiDegree) -> Option<MultiDegree> {
        if self.v.len() != other.v.len() {
            return None;
        }
        let mut v = Vec::with_capacity(self.v.len());
        for (a, b) in self.v.iter().zip(&other.v) {
            let s = a + b;
            if s > 1 {
                return None;
            }
            v.push(s);
        }
        Some(MultiDegree { v })
    }

    /// 1-indexed positions carrying a 1.
    pub fn support(&self) -> Vec<usize> {
        self.v
            .iter()
            .enumerate()
            .filter(|(_, &e)| e == 1)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.v.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Integer polynomial in commuting indeterminates `t_1..t_n` with all
/// exponents 0 or 1: a full table over subset masks (bit `i-1` ⇔ `t_i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPolynomial {
    n: usize,
    coeffs: Vec<i64>,
}

impl TPolynomial {
    pub fn zero(n: usize) -> Self {
        TPolynomial {
            n,
            coeffs: vec![0; 1 << n],
        }
    }

    pub fn new(n: usize, coeffs: Vec<i64>) -> Result<Self, CdError> {
        if coeffs.len() != 1usize << n {
            return Err(CdError::Internal(format!(
                "t-polynomial for n={} needs {} coefficients, got {}",
                n,
                1usize << n,
                coeffs.len()
            )));
        }
        Ok(TPolynomial { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, mask: usize) -> i64 {
        self.coeffs[mask]
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

/// The h-table `Σ_S h_S t^S` from a flag f-vector, via the inclusion–
/// exclusion expansion `h_S = Σ_{T ⊆ S̄} (-1)^{n-|T|-|S|} f_T`.
pub fn h_from_flag(fv: &FlagVector) -> TPolynomial {
    let n = fv.n();
    let full = (1usize << n) - 1;
    let mut out = TPolynomial::zero(n);
    for s in 0..=full {
        let comp = full & !s;
        let s_size = (s as u32).count_ones() as usize;
        let mut acc = 0i64;
        // Iterate all T ⊆ comp, including the empty set.
        let mut t = comp;
        loop {
            let t_size = (t as u32).count_ones() as usize;
            let sign = if (n - t_size - s_size) % 2 == 0 { 1 } else { -1 };
            acc += sign * fv.get(t);
            if t == 0 {
                break;
            }
            t = (t - 1) & comp;
        }
        out.coeffs[s] = acc;
    }
    out
}

/// Expands a degree-`n` word into its t-polynomial: a `c` at position `p`
/// contributes the factor `t_p + 1`, a `d` at positions `p, p+1` the factor
/// `t_p + t_{p+1}`.
pub fn expand_cd_word(w: &CdWord) -> TPolynomial {
    let n = w.degree();
    let mut out = TPolynomial::zero(n);
    // Each factor offers two monomial choices; walk all combinations.
    let mut masks: Vec<usize> = vec![0];
    let mut pos = 0usize; // 0-indexed position of the next letter
    for l in w.letters() {
        match l {
            CdLetter::C => {
                let bit = 1usize << pos;
                let mut next = Vec::with_capacity(masks.len() * 2);
                for m in &masks {
                    next.push(*m);
                    next.push(*m | bit);
                }
                masks = next;
                pos += 1;
            }
            CdLetter::D => {
                let bit_a = 1usize << pos;
                let bit_b = 1usize << (pos + 1);
                let mut next = Vec::with_capacity(masks.len() * 2);
                for m in &masks {
                    next.push(*m | bit_a);
                    next.push(*m | bit_b);
                }
                masks = next;
                pos += 2;
            }
        }
    }
    for m in masks {
        out.coeffs[m] += 1;
    }
    out
}

/// Integer-coefficient combination of degree-`n` cd-words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdPolynomial {
    n: usize,
    coeffs: BTreeMap<CdWord, i64>,
}

impl CdPolynomial {
    pub fn new(n: usize) -> Self {
        CdPolynomial {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sets the coefficient of `w`; zero coefficients are not stored.
    pub fn set(&mut self, w: CdWord, coeff: i64) -> Result<(), CdError> {
        if w.degree() != self.n {
            return Err(CdError::WordDegreeMismatch {
                expected: self.n,
                got: w.degree(),
            });
        }
        if coeff == 0 {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, coeff);
        }
        Ok(())
    }

    pub fn coefficient_of_word(&self, w: &CdWord) -> i64 {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    /// Coefficient at a multidegree: the coefficient of the unique word with
    /// that multidegree, or 0 when the vector is not a multidegree.
    pub fn coefficient(&self, v: &MultiDegree) -> i64 {
        if v.len() != self.n {
            return 0;
        }
        match CdWord::from_mdeg(v) {
            Some(w) => self.coefficient_of_word(&w),
            None => 0,
        }
    }

    /// Words with nonzero coefficient, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&CdWord, i64)> {
        self.coeffs.iter().map(|(w, &c)| (w, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Re-expansion into the t-monomial basis: the coefficient-weighted sum
    /// of the word expansions.
    pub fn expand(&self) -> TPolynomial {
        let mut out = TPolynomial::zero(self.n);
        for (w, c) in self.iter() {
            let e = expand_cd_word(w);
            for (mask, v) in e.coeffs().iter().enumerate() {
                out.coeffs[mask] += c * v;
            }
        }
        out
    }

    /// Parses the standard text format: one `<word> <integer>` pair per
    /// line, `#` comments allowed, the degree-0 word spelled `1`.
    pub fn from_text(text: &str) -> Result<Self, CdError> {
        let mut entries: Vec<(usize, CdWord, i64)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let mut tokens = line.split_whitespace();
            let Some(word_tok) = tokens.next() else { continue };
            let (Some(coeff_tok), None) = (tokens.next(), tokens.next()) else {
                return Err(CdError::Parse {
                    line: line_no,
                    message: "expected: <word> <integer>".into(),
                });
            };
            let word: CdWord = word_tok.parse().map_err(|e| match e {
                CdError::Parse { message, .. } => CdError::Parse {
                    line: line_no,
                    message,
                },
                other => other,
            })?;
            let coeff: i64 = coeff_tok.parse().map_err(|_| CdError::Parse {
                line: line_no,
                message: format!("invalid integer {coeff_tok:?}"),
            })?;
            entries.push((line_no, word, coeff));
        }
        let Some(n) = entries.iter().map(|(_, w, _)| w.degree()).max() else {
            return Err(CdError::Parse {
                line: 0,
                message: "no coefficient lines found".into(),
            });
        };
        let mut out = CdPolynomial::new(n);
        for (line_no, word, coeff) in entries {
            if word.degree() != n {
                return Err(CdError::Parse {
                    line: line_no,
                    message: format!(
                        "word {word} has degree {}, but the table is degree {n}",
                        word.degree()
                    ),
                });
            }
            if out.coeffs.contains_key(&word) {
                return Err(CdError::Parse {
                    line: line_no,
                    message: format!("duplicate word {word}"),
                });
            }
            out.set(word, coeff)?;
        }
        Ok(out)
    }
}

/// One `<word> <coefficient>` line per nonzero word, lexicographically
/// sorted; byte-stable for fixed content.
impl fmt::Display for CdPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, c) in self.iter() {
            writeln!(f, "{w} {c}")?;
        }
        Ok(())
    }
}

/// Extracts the cd-index from an h-table with the default degree bound.
pub fn cd_from_h(h: &TPolynomial) -> Result<CdPolynomial, CdError> {
    cd_from_h_bounded(h, DEFAULT_MAX_SOLVE_DEGREE)
}

/// Extracts the unique integer combination of degree-`n` word expansions
/// equal to `h`, by exact elimination over the full `2^n × W(n)` system.
/// Fails with [`CdError::NotCdExpressible`] when `h` lies outside the span
/// (e.g. a non-Eulerian source) and with [`CdError::DegreeTooLarge`] when
/// `n` exceeds `max_degree`.
pub fn cd_from_h_bounded(h: &TPolynomial, max_degree: usize) -> Result<CdPolynomial, CdError> {
    let n = h.n();
    if n > max_degree {
        return Err(CdError::DegreeTooLarge {
            degree: n,
            max: max_degree,
        });
    }
    let words = CdWord::words_of_degree(n);
    let expansions: Vec<TPolynomial> = words.iter().map(expand_cd_word).collect();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(1 << n);
    for mask in 0..1usize << n {
        let mut row: Vec<BigInt> = Vec::with_capacity(words.len() + 1);
        for e in &expansions {
            row.push(BigInt::from(e.get(mask)));
        }
        row.push(BigInt::from(h.get(mask)));
        rows.push(row);
    }
    let solution = solve_full_rank(rows, words.len()).map_err(|e| match e {
        SolveError::Inconsistent => {
            CdError::NotCdExpressible("the t-monomial system has no solution".into())
        }
        SolveError::RankDeficient => {
            CdError::Internal("word expansions are not independent".into())
        }
    })?;
    let mut out = CdPolynomial::new(n);
    for (w, value) in words.into_iter().zip(solution) {
        if !value.is_integer() {
            return Err(CdError::NotCdExpressible(format!(
                "coefficient of {w} is the non-integer {value}"
            )));
        }
        let coeff = i64::try_from(value.to_integer()).map_err(|_| CdError::CoefficientOverflow)?;
        out.set(w, coeff)?;
    }
    if out.expand() != *h {
        return Err(CdError::Internal(
            "re-expansion of the solved cd-index does not reproduce the input".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::GradedPoset;

    fn word(s: &str) -> CdWord {
        s.parse().unwrap()
    }

    fn mdeg(v: &[u8]) -> MultiDegree {
        MultiDegree::new(v.to_vec()).unwrap()
    }

    fn boolean_cd(m: usize) -> CdPolynomial {
        let fv = GradedPoset::boolean(m).unwrap().flag_f_vector();
        cd_from_h(&h_from_flag(&fv)).unwrap()
    }

    #[test]
    fn word_enumeration_is_lexicographic_and_fibonacci_sized() {
        let spell = |ws: &[CdWord]| ws.iter().map(|w| w.to_string()).collect::<Vec<_>>();
        assert_eq!(spell(&CdWord::words_of_degree(0)), ["1"]);
        assert_eq!(spell(&CdWord::words_of_degree(2)), ["cc", "d"]);
        assert_eq!(spell(&CdWord::words_of_degree(3)), ["ccc", "cd", "dc"]);
        assert_eq!(
            spell(&CdWord::words_of_degree(4)),
            ["cccc", "ccd", "cdc", "dcc", "dd"]
        );
        let (mut a, mut b) = (1usize, 1usize);
        for n in 2..=12 {
            let count = a + b;
            assert_eq!(CdWord::words_of_degree(n).len(), count, "W({n})");
            a = b;
            b = count;
        }
    }

    #[test]
    fn mdeg_matches_substitution_rule() {
        assert_eq!(word("cddc").mdeg(), mdeg(&[0, 1, 0, 1, 0, 0]));
        assert_eq!(CdWord::all_c(5).mdeg(), MultiDegree::zero(5));
        assert_eq!(word("ddd").mdeg(), mdeg(&[1, 0, 1, 0, 1, 0]));
    }

    #[test]
    fn word_from_mdeg_inverts_or_rejects() {
        assert_eq!(
            CdWord::from_mdeg(&mdeg(&[1, 0, 0, 0])).unwrap(),
            word("dcc")
        );
        assert_eq!(CdWord::from_mdeg(&mdeg(&[0, 1])), None);
        assert_eq!(CdWord::from_mdeg(&mdeg(&[1, 1, 0])), None);
        for n in 0..=8 {
            for w in CdWord::words_of_degree(n) {
                assert_eq!(CdWord::from_mdeg(&w.mdeg()).unwrap(), w);
                assert!(w.mdeg().is_valid());
            }
        }
    }

    #[test]
    fn expansion_of_the_double_descent_word() {
        // cddc -> (t1+1)(t2+t3)(t4+t5)(t6+1): 16 monomials, all coefficient 1.
        let e = expand_cd_word(&word("cddc"));
        let ones = e.coeffs().iter().filter(|&&c| c == 1).count();
        let zeros = e.coeffs().iter().filter(|&&c| c == 0).count();
        assert_eq!(ones, 16);
        assert_eq!(zeros, (1 << 6) - 16);
        // Spot checks: t1 t2 t4 present, t2 t3 absent (both from one factor),
        // and every monomial picks one of t4/t5, so plain t2 t6 is absent.
        assert_eq!(e.get(0b001011), 1);
        assert_eq!(e.get(0b000110), 0);
        assert_eq!(e.get(0b110010), 1); // t2 t5 t6
        assert_eq!(e.get(0b100010), 0); // t2 t6
    }

    #[test]
    fn expansion_of_small_words() {
        let cc = expand_cd_word(&word("cc"));
        assert_eq!(cc.coeffs(), &[1, 1, 1, 1]);
        let d = expand_cd_word(&word("d"));
        assert_eq!(d.coeffs(), &[0, 1, 1, 0]);
        let empty = expand_cd_word(&CdWord::empty());
        assert_eq!(empty.coeffs(), &[1]);
    }

    #[test]
    fn h_table_of_boolean_three() {
        // Defining equation by hand: f = (1,3,3,6) gives
        // (t1-1)(t2-1) + 3(t2-1) + 3(t1-1) + 6 = t1t2 + 2t1 + 2t2 + 1.
        let h = h_from_flag(&GradedPoset::boolean(3).unwrap().flag_f_vector());
        assert_eq!(h.get(0b00), 1);
        assert_eq!(h.get(0b01), 2);
        assert_eq!(h.get(0b10), 2);
        assert_eq!(h.get(0b11), 1);
    }

    #[test]
    fn h_table_of_the_octahedron_flag_vector() {
        let fv = crate::poset::FlagVector::new(3, vec![1, 6, 12, 24, 8, 24, 24, 48]).unwrap();
        let h = h_from_flag(&fv);
        let expected = [1, 5, 11, 7, 7, 11, 5, 1];
        for (mask, &want) in expected.iter().enumerate() {
            assert_eq!(h.get(mask), want, "mask {mask:#b}");
        }
    }

    #[test]
    fn h_table_constant_term_is_one_for_eulerian_sources() {
        for m in 1..=5 {
            let h = h_from_flag(&GradedPoset::boolean(m).unwrap().flag_f_vector());
            assert_eq!(h.get(0), 1, "B_{m}");
        }
    }

    #[test]
    fn cd_index_of_boolean_three() {
        let cd = boolean_cd(3);
        assert_eq!(cd.coefficient_of_word(&word("cc")), 1);
        assert_eq!(cd.coefficient_of_word(&word("d")), 1);
        assert_eq!(cd.support_len(), 2);
    }

    #[test]
    fn cd_index_of_boolean_five() {
        let cd = boolean_cd(5);
        assert_eq!(cd.coefficient_of_word(&word("cccc")), 1);
        assert_eq!(cd.coefficient_of_word(&word("dcc")), 3);
        assert_eq!(cd.coefficient_of_word(&word("cdc")), 5);
        assert_eq!(cd.coefficient_of_word(&word("ccd")), 3);
        assert_eq!(cd.coefficient_of_word(&word("dd")), 4);
        assert_eq!(cd.support_len(), 5);
    }

    #[test]
    fn cd_index_of_the_octahedron_h_table() {
        let fv = crate::poset::FlagVector::new(3, vec![1, 6, 12, 24, 8, 24, 24, 48]).unwrap();
        let cd = cd_from_h(&h_from_flag(&fv)).unwrap();
        assert_eq!(cd.coefficient_of_word(&word("ccc")), 1);
        assert_eq!(cd.coefficient_of_word(&word("dc")), 4);
        assert_eq!(cd.coefficient_of_word(&word("cd")), 6);
        assert_eq!(cd.support_len(), 3);
    }

    #[test]
    fn cd_index_of_rank_one_poset_is_the_empty_word() {
        let fv = GradedPoset::boolean(1).unwrap().flag_f_vector();
        let cd = cd_from_h(&h_from_flag(&fv)).unwrap();
        assert_eq!(cd.coefficient_of_word(&CdWord::empty()), 1);
        assert_eq!(cd.to_string(), "1 1\n");
    }

    #[test]
    fn non_eulerian_h_table_is_rejected() {
        // The 3-element chain has f = (1, 1), hence h = t1 with constant
        // term 0; no integer multiple of the expansion of c matches.
        let chain = GradedPoset::new(vec![0, 1, 2], vec![(0, 1), (1, 2)]).unwrap();
        let h = h_from_flag(&chain.flag_f_vector());
        assert_eq!(h.get(0), 0);
        assert_eq!(h.get(1), 1);
        assert!(matches!(
            cd_from_h(&h),
            Err(CdError::NotCdExpressible(_))
        ));
    }

    #[test]
    fn degree_guard_is_enforced() {
        let h = TPolynomial::zero(3);
        assert!(matches!(
            cd_from_h_bounded(&h, 2),
            Err(CdError::DegreeTooLarge { degree: 3, max: 2 })
        ));
    }

    #[test]
    fn round_trip_re_expansion() {
        for m in 1..=6 {
            let h = h_from_flag(&GradedPoset::boolean(m).unwrap().flag_f_vector());
            let cd = cd_from_h(&h).unwrap();
            assert_eq!(cd.expand(), h, "B_{m}");
        }
    }

    #[test]
    fn dehn_sommerville_symmetry_for_booleans() {
        for m in 1..=6 {
            let h = h_from_flag(&GradedPoset::boolean(m).unwrap().flag_f_vector());
            let n = h.n();
            let full = (1usize << n) - 1;
            for mask in 0..=full {
                assert_eq!(h.get(mask), h.get(full & !mask), "B_{m} mask {mask:#b}");
            }
        }
    }

    #[test]
    fn coefficient_lookup_by_multidegree() {
        let cd = boolean_cd(5);
        assert_eq!(cd.coefficient(&mdeg(&[1, 0, 1, 0])), 4);
        assert_eq!(cd.coefficient(&mdeg(&[0, 0, 0, 1])), 0);
        assert_eq!(cd.coefficient(&MultiDegree::zero(4)), 1);
        assert_eq!(cd.coefficient(&mdeg(&[1, 1, 0, 0])), 0);
        assert_eq!(cd.coefficient(&mdeg(&[0, 0, 0])), 0);
    }

    #[test]
    fn multidegree_validity_and_arithmetic() {
        assert!(mdeg(&[0, 1, 0, 1, 0, 0]).is_valid());
        assert!(!mdeg(&[0, 1]).is_valid());
        assert!(!mdeg(&[1, 1, 0]).is_valid());
        assert!(MultiDegree::zero(0).is_valid());
        assert!(MultiDegree::new(vec![0, 2]).is_err());
        let a = MultiDegree::unit(4, 1).unwrap();
        let b = MultiDegree::unit(4, 3).unwrap();
        assert_eq!(a.checked_add(&b).unwrap(), mdeg(&[1, 0, 1, 0]));
        assert_eq!(a.checked_add(&a), None);
        assert_eq!(a.support(), vec![1]);
        assert_eq!(mdeg(&[1, 0, 1, 0]).support(), vec![1, 3]);
    }

    #[test]
    fn text_format_round_trip() {
        let text = "# cd-index of the octahedron\nccc 1\ncd 6\ndc 4\n";
        let cd = CdPolynomial::from_text(text).unwrap();
        assert_eq!(cd.n(), 3);
        assert_eq!(cd.to_string(), "ccc 1\ncd 6\ndc 4\n");
        let again = CdPolynomial::from_text(&cd.to_string()).unwrap();
        assert_eq!(again, cd);
    }

    #[test]
    fn text_format_rejects_bad_input() {
        assert!(matches!(
            CdPolynomial::from_text("cc x\n"),
            Err(CdError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            CdPolynomial::from_text("cc 1\nccc 2\n"),
            Err(CdError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            CdPolynomial::from_text("cc 1\ncc 2\n"),
            Err(CdError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            CdPolynomial::from_text("cq 1\n"),
            Err(CdError::Parse { line: 1, .. })
        ));
        assert!(CdPolynomial::from_text("# nothing\n").is_err());
    }
}
