//! End-to-end acceptance checks. Each test covers one numbered criterion,
//! prints a single PASS line on success, and enforces its runtime cap.

use std::time::{Duration, Instant};

use cdkit::algebra::MultiGradedAlgebra;
use cdkit::analysis::{
    check_inequalities, check_product_inequality, realizable_as_colored_complex, Realizability,
    SearchBudget,
};
use cdkit::cdindex::{cd_from_h, h_from_flag, CdPolynomial, CdWord};
use cdkit::paths::{
    admissibility_violation, enumerate_admissible, enumerate_weighted, is_admissible,
    AdmissibilityViolation, HVector, PathFunction,
};
use cdkit::poset::GradedPoset;
use cdkit::shelling::{eval_word, opword_from_cd, trace_eval, FanTerm};
use cdkit::simplicial::{
    f_vector, find_shelling, flag_from_face_counts, h_from_shelling, h_vector, face_poset,
    ShellingSearch, SimplicialComplex,
};

const COUNTEREXAMPLE_FILE: &str =
    concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/degree6_counterexample.cd");

/// cd-index of the rank-(n+1) subset lattice via the flag-vector solve.
fn cd_by_flag_vector(n: usize) -> CdPolynomial {
    let poset = GradedPoset::boolean(n + 1).expect("n + 1 >= 1");
    cd_from_h(&h_from_flag(&poset.flag_f_vector())).expect("subset lattices are Eulerian")
}

/// cd-index via weighted admissible-path counting.
fn cd_by_paths(n: usize, h: &HVector) -> CdPolynomial {
    let mut out = CdPolynomial::new(n);
    for w in CdWord::words_of_degree(n) {
        let count = enumerate_weighted(&w, h).expect("weights match degree").len() as i64;
        out.set(w, count).expect("degree matches");
    }
    out
}

/// cd-index via shelling-calculus evaluation over the complete fan.
fn cd_by_shelling(n: usize) -> CdPolynomial {
    let mut out = CdPolynomial::new(n);
    let start = FanTerm::complete(n);
    for w in CdWord::words_of_degree(n) {
        let count = eval_word(&opword_from_cd(&w), &start).expect("length matches dimension");
        out.set(w, i64::try_from(count).expect("count fits i64"))
            .expect("degree matches");
    }
    out
}

/// cd-index of a simplicial sphere via face counts, flag vector, and solve.
fn cd_of_complex(k: &SimplicialComplex) -> CdPolynomial {
    let f = f_vector(k).expect("pure complex");
    let flag = flag_from_face_counts(&f).expect("no overflow at these sizes");
    cd_from_h(&h_from_flag(&flag)).expect("sphere tables are expressible")
}

fn sphere_corpus() -> Vec<(&'static str, SimplicialComplex)> {
    let mut spheres = vec![
        ("octahedron", SimplicialComplex::octahedron()),
        ("icosahedron", SimplicialComplex::icosahedron()),
    ];
    for k in 3..=8 {
        let name: &'static str = match k {
            3 => "bipyramid over the 3-gon",
            4 => "bipyramid over the 4-gon",
            5 => "bipyramid over the 5-gon",
            6 => "bipyramid over the 6-gon",
            7 => "bipyramid over the 7-gon",
            _ => "bipyramid over the 8-gon",
        };
        spheres.push((name, SimplicialComplex::bipyramid(k).expect("k >= 3")));
    }
    spheres
}

#[test]
fn criterion_1_boolean_rank_five_by_all_three_pipelines() {
    let started = Instant::now();
    let expected =
        CdPolynomial::from_text("cccc 1\ndcc 3\ncdc 5\nccd 3\ndd 4\n").expect("literal table");
    assert_eq!(cd_by_flag_vector(4), expected, "flag-vector solve");
    assert_eq!(cd_by_paths(4, &HVector::ones(4)), expected, "path counting");
    assert_eq!(cd_by_shelling(4), expected, "shelling evaluation");
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!(
        "criterion 1: PASS — c^4 + 3dc^2 + 5cdc + 3c^2d + 4d^2 by all three pipelines ({elapsed:?})"
    );
}

#[test]
fn criterion_2_triple_pipeline_agreement_through_degree_eight() {
    let started = Instant::now();
    for n in 0..=8 {
        let by_flag = cd_by_flag_vector(n);
        let by_paths = cd_by_paths(n, &HVector::ones(n));
        let by_shelling = cd_by_shelling(n);
        assert_eq!(by_flag, by_paths, "flag vs paths at degree {n}");
        assert_eq!(by_flag, by_shelling, "flag vs shelling at degree {n}");
        for w in CdWord::words_of_degree(n) {
            assert_eq!(
                by_flag.coefficient_of_word(&w),
                by_paths.coefficient_of_word(&w),
                "word {w}"
            );
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 2: PASS — three pipelines agree on every word through degree 8 ({elapsed:?})");
}

#[test]
fn criterion_3_simplicial_spheres_match_weighted_paths() {
    let started = Instant::now();
    let octahedron = SimplicialComplex::octahedron();
    let f = f_vector(&octahedron).expect("pure");
    assert_eq!(f.counts(), &[1, 6, 12, 8]);
    let h = h_vector(&f).expect("nonnegative");
    assert_eq!(h.entries(), &[1, 3, 3, 1]);
    let expected = CdPolynomial::from_text("ccc 1\ndc 4\ncd 6\n").expect("literal table");
    assert_eq!(cd_of_complex(&octahedron), expected, "flag pipeline");
    assert_eq!(cd_by_paths(3, &h), expected, "weighted path counts");

    for (name, sphere) in sphere_corpus() {
        let by_flag = cd_of_complex(&sphere);
        let h = h_vector(&f_vector(&sphere).expect("pure")).expect("nonnegative");
        let by_paths = cd_by_paths(by_flag.n(), &h);
        assert_eq!(by_flag, by_paths, "{name}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("criterion 3: PASS — sphere cd-indices match weighted path counts ({elapsed:?})");
}

#[test]
fn criterion_4_algebra_verification() {
    let started = Instant::now();
    for n in 0..=6 {
        let a = MultiGradedAlgebra::boolean(n).expect("rank within cap");
        let report = a.verify_axioms();
        assert!(report.is_ok(), "axioms for rank {n}:\n{report}");
        let cd = cd_by_flag_vector(n);
        for w in CdWord::words_of_degree(n) {
            assert_eq!(
                a.graded_dimension(&w.mdeg()) as i64,
                cd.coefficient_of_word(&w),
                "dimension at {w} for rank {n}"
            );
        }
        let factorization = a.verify_unique_factorization();
        assert!(factorization.is_ok(), "factorization for rank {n}:\n{factorization}");
    }
    for (name, sphere) in sphere_corpus() {
        let h = h_vector(&f_vector(&sphere).expect("pure")).expect("nonnegative");
        let a = MultiGradedAlgebra::new(h).expect("rank within cap");
        let report = a.verify_axioms();
        assert!(report.is_ok(), "axioms for {name}:\n{report}");
        let cd = cd_of_complex(&sphere);
        for w in CdWord::words_of_degree(a.n()) {
            assert_eq!(
                a.graded_dimension(&w.mdeg()) as i64,
                cd.coefficient_of_word(&w),
                "dimension at {w} for {name}"
            );
        }
        let factorization = a.verify_unique_factorization();
        assert!(factorization.is_ok(), "factorization for {name}:\n{factorization}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!("criterion 4: PASS — algebra axioms, dimensions, unique factorization ({elapsed:?})");
}

#[test]
fn criterion_5_membership_facts() {
    let started = Instant::now();
    let cddc: CdWord = "cddc".parse().expect("valid word");
    let member: PathFunction = "(0,1,0,2,2,3,6)".parse().expect("valid path");
    assert!(is_admissible(&member, &cddc).expect("lengths match"));

    let dd: CdWord = "dd".parse().expect("valid word");
    let rejected: PathFunction = "(0,0,2,0,4)".parse().expect("valid path");
    let violation = admissibility_violation(&rejected, &dd)
        .expect("lengths match")
        .expect("not admissible");
    assert_eq!(violation, AdmissibilityViolation::DescentBound { position: 3 });
    assert!(violation.to_string().contains("bound on descent"));

    assert_eq!(enumerate_admissible(&dd).len(), 4);
    let elapsed = started.elapsed();
    println!("criterion 5: PASS — membership, bound-on-descent rejection, dd count 4 ({elapsed:?})");
}

#[test]
fn criterion_6_inequality_suite() {
    let started = Instant::now();
    let mut tables: Vec<(String, CdPolynomial)> = Vec::new();
    for n in 0..=8 {
        tables.push((format!("subset lattice, degree {n}"), cd_by_flag_vector(n)));
    }
    for (name, sphere) in sphere_corpus() {
        tables.push((name.to_string(), cd_of_complex(&sphere)));
    }
    for (name, table) in &tables {
        let split = check_inequalities(table);
        assert!(split.is_empty(), "{name}: {}", split[0]);
        let product = check_product_inequality(table);
        assert!(product.is_empty(), "{name}: {}", product[0]);
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!(
        "criterion 6: PASS — zero violations across {} tables, both inequality families ({elapsed:?})",
        tables.len()
    );
}

#[test]
fn criterion_7_counterexample_separation() {
    let started = Instant::now();
    let text = std::fs::read_to_string(COUNTEREXAMPLE_FILE).expect("bundled data file");
    let p = CdPolynomial::from_text(&text).expect("valid table");
    assert!(check_inequalities(&p).is_empty(), "inequalities must pass");
    let got = realizable_as_colored_complex(&p, &SearchBudget::default()).expect("nonnegative");
    assert_eq!(
        got,
        Realizability::Unrealizable,
        "must be a definitive refusal, not a timeout"
    );
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!("criterion 7: PASS — inequalities hold yet no colored complex exists ({elapsed:?})");
}

#[test]
fn criterion_8_shelling_h_vectors() {
    let started = Instant::now();
    let mut complexes = vec![("octahedron".to_string(), SimplicialComplex::octahedron())];
    for m in 2..=7 {
        complexes.push((
            format!("boundary of the {}-simplex", m - 1),
            SimplicialComplex::simplex_boundary(m).expect("m >= 2"),
        ));
    }
    for (name, complex) in &complexes {
        let search = find_shelling(complex).expect("pure complex");
        let ShellingSearch::Found {
            restriction_sizes, ..
        } = search
        else {
            panic!("{name}: expected a shelling, got {search:?}");
        };
        let n = f_vector(complex).expect("pure").n();
        let from_shelling = h_from_shelling(&restriction_sizes, n).expect("sizes in range");
        let from_faces = h_vector(&f_vector(complex).expect("pure")).expect("nonnegative");
        assert_eq!(from_shelling, from_faces, "{name}");
    }
    let elapsed = started.elapsed();
    println!("criterion 8: PASS — shelling-derived h equals face-count h ({elapsed:?})");
}

#[test]
fn criterion_9_property_suite() {
    let started = Instant::now();

    // Dehn–Sommerville symmetry and leading coefficient one for the
    // Eulerian test posets: subset lattices and sphere face posets.
    let mut posets: Vec<(String, GradedPoset)> = Vec::new();
    for m in 1..=9 {
        posets.push((format!("subset lattice of {m} elements"), GradedPoset::boolean(m).expect("m >= 1")));
    }
    for (name, sphere) in sphere_corpus() {
        posets.push((format!("face poset of the {name}"), face_poset(&sphere).expect("valid complex")));
    }
    for m in 2..=6 {
        let sphere = SimplicialComplex::simplex_boundary(m).expect("m >= 2");
        posets.push((format!("face poset of the boundary of the {}-simplex", m - 1), face_poset(&sphere).expect("valid complex")));
    }
    for (name, poset) in &posets {
        let h = h_from_flag(&poset.flag_f_vector());
        let n = h.n();
        let full = (1usize << n) - 1;
        for mask in 0..=full {
            assert_eq!(h.get(mask), h.get(full & !mask), "{name}: mask {mask:#b}");
        }
        let cd = cd_from_h(&h).expect("Eulerian tables are expressible");
        assert_eq!(cd.coefficient_of_word(&CdWord::all_c(n)), 1, "{name}");
    }

    // The small posets are genuinely Eulerian, and the 3-chain is not.
    for m in 1..=6 {
        assert!(GradedPoset::boolean(m).expect("m >= 1").is_eulerian());
    }
    assert!(face_poset(&SimplicialComplex::octahedron()).expect("valid").is_eulerian());
    let chain = GradedPoset::new(vec![0, 1, 2], vec![(0, 1), (1, 2)]).expect("valid chain");
    assert!(!chain.is_eulerian(), "the 3-chain must be rejected");

    // Shelling traces and admissible paths coincide as sets for every word
    // of degree at most 8.
    for n in 0..=8 {
        let start = FanTerm::complete(n);
        for w in CdWord::words_of_degree(n) {
            let branches = trace_eval(&opword_from_cd(&w), &start).expect("within trace cap");
            let mut traced: Vec<PathFunction> =
                branches.into_iter().map(|b| b.path).collect();
            traced.sort();
            traced.dedup();
            let enumerated = enumerate_admissible(&w);
            assert_eq!(traced, enumerated, "word {w}");
        }
    }

    let elapsed = started.elapsed();
    println!("criterion 9: PASS — symmetry, leading coefficient, trace bijection, 3-chain rejection ({elapsed:?})");
}
