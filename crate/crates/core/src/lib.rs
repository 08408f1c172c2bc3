//! Exact arithmetic for the cd-index of Eulerian posets and simplicial spheres.
//!
//! The crate provides three independent routes to the same family of
//! invariants, so that each can be cross-checked against the others:
//!
//! * [`poset`] and [`cdindex`] compute flag f-vectors of graded posets,
//!   convert them to h-tables, and extract the cd-index by an exact linear
//!   solve over the word-expansion basis.
//! * [`paths`] enumerates admissible lattice paths for a cd-word, optionally
//!   weighted by an h-vector; their counts reproduce cd coefficients.
//! * [`shelling`] evaluates operator words symbolically on product fans;
//!   terminal counts again reproduce cd coefficients, and traced evaluation
//!   reproduces the admissible paths themselves.
//!
//! On top of these, [`algebra`] builds the multigraded algebra of labeled
//! admissible paths and machine-checks its axioms, [`simplicial`] handles
//! simplicial complexes (f/h/g-vectors, flag vectors, shelling search), and
//! [`analysis`] checks coefficient inequalities and colored-complex
//! realizability of a coefficient table.
//!
//! All arithmetic is exact: machine integers where bounds are known,
//! arbitrary-precision rationals inside the linear solver. There is no
//! floating point anywhere.

pub mod algebra;
pub mod analysis;
pub mod cdindex;
mod exact;
pub mod paths;
pub mod poset;
pub mod shelling;
pub mod simplicial;

pub(crate) mod util {
    /// Binomial coefficient as an exact `i64`; callers keep `n` small enough
    /// (at most 64) that no intermediate overflows.
    pub fn binomial(n: usize, k: usize) -> i64 {
        if k > n {
            return 0;
        }
        let k = k.min(n - k);
        let mut acc: i128 = 1;
        for i in 0..k {
            acc = acc * (n - i) as i128 / (i + 1) as i128;
        }
        acc as i64
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        #[test]
        fn binomial_small_values() {
            assert_eq!(binomial(0, 0), 1);
            assert_eq!(binomial(5, 2), 10);
            assert_eq!(binomial(5, 0), 1);
            assert_eq!(binomial(5, 5), 1);
            assert_eq!(binomial(4, 7), 0);
            assert_eq!(binomial(10, 3), 120);
        }
    }
}
