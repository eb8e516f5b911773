//! Acceptance suite: one test per criterion, exact (tolerance-zero)
//! assertions over F_p. Shared expensive computations are cached behind
//! OnceLocks so the criteria stay independent as tests.

use std::sync::OnceLock;
use std::time::Instant;

use itertools::Itertools;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use csgin::algebra::{BlockChange, RingConfig, TermOrder};
use csgin::combinatorics::{
    classify_hypergraph, connected_subsets, lead_coprime_regular_sequence,
    obstruction_hypergraph, predict_gin_generators, Graph, Hypergraph, HypergraphClass,
};
use csgin::groebner::{component_basis, ideal_membership, initial_ideal, Ideal, MonomialIdeal};
use csgin::hilbert::{
    k_multiplicativity_check, k_polynomial, psi, psi_inverse, verify_numerator_identity,
    BoundedMonomialIdeal,
};
use csgin::models::{
    binomial_edge_ideal, degree_family_ideal, hypergraph_minor_ideal, minor,
    row_graded_minor_ideal, MinorSpec,
};
use csgin::multigrading::{
    check_cs, is_borel_fixed, is_radical_monomial, multidegree_multiplicity_free,
    multigraded_gin, CsStatus, CsVerdict, GinReport,
};

const PRIME: u64 = 32003;
const SECOND_PRIME: u64 = 1000003;
const SEED: u64 = 42;

struct SweepInstance {
    graph: Graph,
    m: usize,
    report: GinReport,
}

/// All 64 labeled graphs on 4 vertices, m in {2, 3}, two samples each.
fn prediction_sweep() -> &'static Vec<SweepInstance> {
    static SWEEP: OnceLock<Vec<SweepInstance>> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let order = TermOrder::degrevlex();
        let mut out = Vec::new();
        for graph in Graph::enumerate_all(4) {
            for m in [2usize, 3] {
                let ideal = binomial_edge_ideal(&graph, m, PRIME).expect("valid instance");
                let report =
                    multigraded_gin(&ideal, &order, 2, SEED).expect("sampling cannot fail");
                out.push(SweepInstance {
                    graph: graph.clone(),
                    m,
                    report,
                });
            }
        }
        out
    })
}

fn four_triangles_hypergraph() -> Hypergraph {
    Hypergraph::new(
        6,
        3,
        vec![vec![1, 2, 3], vec![3, 4, 5], vec![5, 6, 1], vec![2, 4, 6]],
    )
    .expect("valid hypergraph")
}

fn four_triangles_verdict(prime: u64) -> &'static CsVerdict {
    static V1: OnceLock<CsVerdict> = OnceLock::new();
    static V2: OnceLock<CsVerdict> = OnceLock::new();
    let cell = if prime == PRIME { &V1 } else { &V2 };
    cell.get_or_init(|| {
        let ideal = hypergraph_minor_ideal(&four_triangles_hypergraph(), 3, prime).expect("valid");
        check_cs(&ideal, &TermOrder::degrevlex(), 2, SEED).expect("verdict")
    })
}

fn cluster_forest_hypergraph() -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for cluster in [
        vec![1, 2, 3, 4],
        vec![4, 5, 6],
        (6..=10).collect::<Vec<_>>(),
        (11..=14).collect(),
    ] {
        edges.extend(cluster.into_iter().combinations(3));
    }
    Hypergraph::new(14, 3, edges).expect("valid hypergraph")
}

#[test]
fn criterion_01_exhaustive_prediction_match() {
    let t = Instant::now();
    for inst in prediction_sweep() {
        assert!(
            inst.report.stable,
            "unstable gin for edges {:?}, m = {}",
            inst.graph.edges().collect::<Vec<_>>(),
            inst.m
        );
        let predicted = predict_gin_generators(&inst.graph, inst.m, PRIME).unwrap();
        assert_eq!(
            inst.report.gin.as_ref(),
            Some(&predicted),
            "gin mismatch for edges {:?}, m = {}",
            inst.graph.edges().collect::<Vec<_>>(),
            inst.m
        );
    }
    eprintln!(
        "ACCEPTANCE 1 gin-vs-prediction sweep (64 graphs x m in {{2,3}}): PASS ({:.1?})",
        t.elapsed()
    );
}

#[test]
fn criterion_02_radical_borel_fixed() {
    let t = Instant::now();
    for inst in prediction_sweep() {
        for sample in &inst.report.samples {
            assert!(is_radical_monomial(sample), "non-squarefree gin sample");
            assert!(
                is_borel_fixed(sample).expect("radical"),
                "gin sample violates the exchange condition"
            );
            assert!(
                multidegree_multiplicity_free(sample),
                "gin generator repeats a column"
            );
        }
    }
    eprintln!("ACCEPTANCE 2 radicality and (BF): PASS ({:.1?})", t.elapsed());
}

#[test]
fn criterion_03_bijection_numerator_suite() {
    let t = Instant::now();
    for inst in prediction_sweep() {
        let gin = inst.report.gin.as_ref().expect("stable by criterion 1");
        let pre = psi_inverse(gin).expect("gin is radical Borel-fixed");
        assert!(
            pre.gens()
                .iter()
                .all(|g| g.iter().all(|&e| e <= inst.m as u32)),
            "preimage exponent exceeds m"
        );
        let back = psi(&pre, gin.ring()).expect("bounded preimage");
        assert_eq!(&back, gin, "psi roundtrip failed");
        assert!(verify_numerator_identity(&pre, gin), "numerator identity failed");
    }

    // 200 random bounded monomial ideals with n <= 3 and bounds <= 3
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut draw = |k: u64| -> u64 { rng.next_u64() % k };
    for round in 0..200 {
        let n = 1 + draw(3) as usize;
        let bounds: Vec<u32> = (0..n).map(|_| 1 + draw(3) as u32).collect();
        let count = draw(4) as usize + (round % 2);
        let gens: Vec<Vec<u32>> = (0..count)
            .map(|_| bounds.iter().map(|&b| draw(b as u64 + 1) as u32).collect())
            .collect();
        let ideal = BoundedMonomialIdeal::new(bounds.clone(), gens).expect("within bounds");
        let blocks: Vec<usize> = bounds.iter().map(|&b| b as usize).collect();
        let ring = RingConfig::new(blocks, PRIME).unwrap();
        let image = psi(&ideal, &ring).expect("polarization within bounds");
        assert!(is_radical_monomial(&image));
        assert!(is_borel_fixed(&image).expect("radical"), "psi image not Borel-fixed");
        let back = psi_inverse(&image).expect("image is radical Borel-fixed");
        assert_eq!(back, ideal, "round {round}: psi roundtrip failed");
        assert!(verify_numerator_identity(&ideal, &image), "round {round}: numerator identity");
    }
    eprintln!("ACCEPTANCE 3 psi/numerator suite: PASS ({:.1?})", t.elapsed());
}

#[test]
fn criterion_04_not_cs_reproductions() {
    let t = Instant::now();
    let order = TermOrder::degrevlex();

    // (a) the obstruction instance
    let h = obstruction_hypergraph(3, 1, 5).unwrap();
    let ideal = hypergraph_minor_ideal(&h, 3, PRIME).unwrap();
    let v = check_cs(&ideal, &order, 3, SEED).unwrap();
    assert_eq!(v.status, CsStatus::NotCs);
    let witness = v.witness.expect("refutation carries a witness");
    assert!(!is_radical_monomial(&witness), "witness must be non-squarefree");

    // (b) the row-graded complete intersection of two disjoint edges
    let g = Hypergraph::new(4, 2, vec![vec![1, 2], vec![3, 4]]).unwrap();
    let ideal = row_graded_minor_ideal(&g, 2, PRIME).unwrap();
    let v = check_cs(&ideal, &order, 3, SEED).unwrap();
    assert_eq!(v.status, CsStatus::NotCs);
    assert!(!is_radical_monomial(&v.witness.expect("witness")));

    // column grading of the same instance is CS, for contrast
    let g2 = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
    let ideal = binomial_edge_ideal(&g2, 2, PRIME).unwrap();
    let v = check_cs(&ideal, &order, 2, SEED).unwrap();
    assert_eq!(v.status, CsStatus::Certified);

    // (c) the four-triangles example over two primes
    for prime in [PRIME, SECOND_PRIME] {
        let v = four_triangles_verdict(prime);
        assert_eq!(v.status, CsStatus::NotCs, "prime {prime}");
        let witness = v.witness.as_ref().expect("witness");
        assert!(!is_radical_monomial(witness), "prime {prime}");
        assert_eq!(v.report.prime, prime);
    }
    eprintln!("ACCEPTANCE 4 not-CS reproductions: PASS ({:.1?})", t.elapsed());
}

#[test]
fn criterion_05_linked_sum_of_minors() {
    let t = Instant::now();
    let ring = RingConfig::uniform(5, 3, PRIME).unwrap();
    let d1 = minor(&ring, &MinorSpec::new(vec![1, 2, 3], vec![1, 2, 3]).unwrap()).unwrap();
    let d2 = minor(&ring, &MinorSpec::new(vec![1, 2, 3], vec![3, 4, 5]).unwrap()).unwrap();
    let ideal = Ideal::new(ring, vec![d1, d2]);
    let v = check_cs(&ideal, &TermOrder::degrevlex(), 3, SEED).unwrap();
    assert_eq!(v.status, CsStatus::Certified);
    let witness = v.witness.expect("certificate");
    assert!(is_radical_monomial(&witness));
    assert!(is_borel_fixed(&witness).unwrap());
    eprintln!(
        "ACCEPTANCE 5 linked maximal-minor sum: PASS ({:.1?})",
        t.elapsed()
    );
}

#[test]
fn criterion_06_degree_family_law() {
    let t = Instant::now();
    let orders = [TermOrder::lex(), TermOrder::degrevlex()];
    for n in 2..=4usize {
        for m in [2usize, 3] {
            // one shared I_2(X) per ring so its basis cache is reused
            let i2x = binomial_edge_ideal(&Graph::complete(n), m, PRIME).unwrap();
            for graph in Graph::enumerate_all(n) {
                let family: Vec<Vec<usize>> = connected_subsets(&graph)
                    .unwrap()
                    .into_iter()
                    .map(|s| s.into_iter().collect())
                    .collect();
                let edge_ideal = binomial_edge_ideal(&graph, m, PRIME).unwrap();
                let (family_ideal, closure) =
                    degree_family_ideal(&i2x, &family, &orders[0]).unwrap();
                assert!(closure.closed, "connected subsets are union-closed");

                // mutual membership of generators
                for gen in family_ideal.gens() {
                    assert!(
                        ideal_membership(gen, &edge_ideal, &orders[0]),
                        "family generator outside the edge ideal (n={n}, m={m})"
                    );
                }
                for gen in edge_ideal.gens() {
                    assert!(
                        ideal_membership(gen, &family_ideal, &orders[0]),
                        "edge generator outside the family ideal (n={n}, m={m})"
                    );
                }

                // initial ideal generated by component leading terms
                for order in &orders {
                    let mut lt_gens = Vec::new();
                    for a in &family {
                        for f in component_basis(&i2x, a, order).unwrap() {
                            lt_gens.push(f.leading_term(order).unwrap().0.clone());
                        }
                    }
                    let lt_ideal = MonomialIdeal::new(i2x.ring().clone(), lt_gens);
                    let init = initial_ideal(&family_ideal, order);
                    assert_eq!(
                        init, lt_ideal,
                        "initial ideal differs from component leading terms (n={n}, m={m})"
                    );
                }
            }
        }
    }
    eprintln!("ACCEPTANCE 6 degree-family law: PASS ({:.1?})", t.elapsed());
}

#[test]
fn criterion_07_double_laplace_membership() {
    let t = Instant::now();
    let ring = RingConfig::uniform(3, 3, PRIME).unwrap();
    let field = ring.field();
    let order = TermOrder::degrevlex();
    let minors = |j: usize, k: usize| -> Vec<csgin::algebra::Polynomial> {
        let (j, k) = (j.min(k), j.max(k));
        (1..=3usize)
            .tuple_combinations()
            .map(|(a, b)| minor(&ring, &MinorSpec::new(vec![a, b], vec![j, k]).unwrap()).unwrap())
            .collect()
    };
    let col_vars = |l: usize| -> Vec<csgin::algebra::Polynomial> {
        (1..=3)
            .map(|i| {
                csgin::algebra::parse_polynomial(&format!("x[{i},{l}]"), &ring).unwrap()
            })
            .collect()
    };
    for (j, k, l) in [(1, 2, 3), (2, 3, 1), (1, 3, 2)] {
        let mut target_gens = Vec::new();
        for m in minors(l, k) {
            for v in col_vars(j) {
                target_gens.push(m.mul(&v, field));
            }
        }
        for m in minors(j, l) {
            for v in col_vars(k) {
                target_gens.push(m.mul(&v, field));
            }
        }
        let target = Ideal::new(ring.clone(), target_gens);
        let mut checked = 0;
        for m in minors(j, k) {
            for v in col_vars(l) {
                assert!(
                    ideal_membership(&m.mul(&v, field), &target, &order),
                    "expansion inclusion failed for (j,k,l)=({j},{k},{l})"
                );
                checked += 1;
            }
        }
        assert_eq!(checked, 9);
    }
    eprintln!(
        "ACCEPTANCE 7 double-Laplace expansion membership: PASS ({:.1?})",
        t.elapsed()
    );
}

#[test]
fn criterion_08_k_polynomial_consistency() {
    let t = Instant::now();
    let lex = TermOrder::lex();
    let drl = TermOrder::degrevlex();

    // every ideal from the criterion-1 sweep, plus the criterion-5 instance
    let mut instances: Vec<Ideal> = prediction_sweep()
        .iter()
        .map(|inst| binomial_edge_ideal(&inst.graph, inst.m, PRIME).unwrap())
        .collect();
    let ring = RingConfig::uniform(5, 3, PRIME).unwrap();
    let d1 = minor(&ring, &MinorSpec::new(vec![1, 2, 3], vec![1, 2, 3]).unwrap()).unwrap();
    let d2 = minor(&ring, &MinorSpec::new(vec![1, 2, 3], vec![3, 4, 5]).unwrap()).unwrap();
    instances.push(Ideal::new(ring, vec![d1, d2]));

    for (k, ideal) in instances.iter().enumerate() {
        let k_lex = k_polynomial(ideal, &lex).unwrap();
        let k_drl = k_polynomial(ideal, &drl).unwrap();
        assert_eq!(k_lex, k_drl, "instance {k}: K depends on the order");
        let g = BlockChange::random(ideal.ring(), SEED.wrapping_add(k as u64)).unwrap();
        let moved = Ideal::new(
            ideal.ring().clone(),
            g.apply_all(ideal.ring(), ideal.gens()),
        );
        let k_moved = k_polynomial(&moved, &drl).unwrap();
        assert_eq!(k_lex, k_moved, "instance {k}: K changed under coordinates");
    }

    // multiplicativity for 20 random variable-disjoint pairs
    let ring = RingConfig::uniform(6, 2, PRIME).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x5117);
    for round in 0..20 {
        let pick = |rng: &mut ChaCha8Rng, offset: usize| -> Vec<csgin::algebra::Polynomial> {
            let pairs: Vec<(usize, usize)> = (1 + offset..=3 + offset).tuple_combinations().collect();
            let mask = 1 + (rng.next_u64() % 7) as usize;
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &(a, b))| {
                    minor(&ring, &MinorSpec::new(vec![1, 2], vec![a, b]).unwrap()).unwrap()
                })
                .collect()
        };
        let a = Ideal::new(ring.clone(), pick(&mut rng, 0));
        let b = Ideal::new(ring.clone(), pick(&mut rng, 3));
        assert!(
            k_multiplicativity_check(&a, &b, &drl).unwrap(),
            "round {round}: multiplicativity failed"
        );
    }
    eprintln!(
        "ACCEPTANCE 8 K-polynomial consistency: PASS ({:.1?})",
        t.elapsed()
    );
}

#[test]
fn criterion_09_classifier_concordance() {
    let t = Instant::now();
    let order = TermOrder::degrevlex();

    // forest of complete clusters: CS both ways
    let forest = cluster_forest_hypergraph();
    let c = classify_hypergraph(&forest, 3, PRIME).unwrap();
    assert_eq!(c.class, HypergraphClass::CsByForest);
    let ideal = hypergraph_minor_ideal(&forest, 3, PRIME).unwrap();
    let v = check_cs(&ideal, &order, 1, SEED).unwrap();
    assert_eq!(v.status, CsStatus::Certified, "forest fixture must certify");

    // obstruction family: refuted both ways
    for (m, tt, n) in [(3usize, 1usize, 5usize), (3, 2, 7), (3, 3, 9)] {
        let h = obstruction_hypergraph(m, tt, n).unwrap();
        let c = classify_hypergraph(&h, m, PRIME).unwrap();
        assert_eq!(
            c.class,
            HypergraphClass::NotCsByCycle,
            "(m,t,n)=({m},{tt},{n})"
        );
    }
    let h = obstruction_hypergraph(3, 1, 5).unwrap();
    let ideal = hypergraph_minor_ideal(&h, 3, PRIME).unwrap();
    let v = check_cs(&ideal, &order, 2, SEED).unwrap();
    assert_eq!(v.status, CsStatus::NotCs);

    // complete uniform hypergraphs with s in {2, min(m,n)}
    let c2 = Hypergraph::complete(4, 2).unwrap();
    assert_eq!(
        classify_hypergraph(&c2, 3, PRIME).unwrap().class,
        HypergraphClass::CsMaximalMinors
    );
    let ideal = hypergraph_minor_ideal(&c2, 3, PRIME).unwrap();
    assert_eq!(
        check_cs(&ideal, &order, 2, SEED).unwrap().status,
        CsStatus::Certified
    );
    let c3 = Hypergraph::complete(4, 3).unwrap();
    assert_eq!(
        classify_hypergraph(&c3, 3, PRIME).unwrap().class,
        HypergraphClass::CsMaximalMinors
    );
    let ideal = hypergraph_minor_ideal(&c3, 3, PRIME).unwrap();
    assert_eq!(
        check_cs(&ideal, &order, 2, SEED).unwrap().status,
        CsStatus::Certified
    );

    // the four-triangles example stays undecided combinatorially, while the engine
    // refutes it: the cycle family is not the only obstruction
    let c = classify_hypergraph(&four_triangles_hypergraph(), 3, PRIME).unwrap();
    assert_eq!(c.class, HypergraphClass::Unknown);
    assert_eq!(four_triangles_verdict(PRIME).status, CsStatus::NotCs);

    eprintln!(
        "ACCEPTANCE 9 classifier concordance: PASS ({:.1?})",
        t.elapsed()
    );
}

#[test]
fn criterion_10_window_regular_sequence() {
    let t = Instant::now();
    let ring = RingConfig::uniform(7, 3, PRIME).unwrap();
    let windows = [1usize, 3, 5];
    let gens: Vec<csgin::algebra::Polynomial> = windows
        .iter()
        .map(|&j| {
            minor(
                &ring,
                &MinorSpec::new(vec![1, 2, 3], (j..j + 3).collect()).unwrap(),
            )
            .unwrap()
        })
        .collect();
    let diag = TermOrder::lex();
    assert!(lead_coprime_regular_sequence(&gens, &diag));
    let ideal = Ideal::new(ring, gens);
    let init = initial_ideal(&ideal, &diag);
    assert_eq!(init.codim(), Some(3), "height must equal generator count");
    assert_eq!(init.gens().len(), 3);
    eprintln!(
        "ACCEPTANCE 10 window regular-sequence certificate: PASS ({:.1?})",
        t.elapsed()
    );
}

#[test]
fn sections_duplication_invariance() {
    // un-duplicating a duplicated-column construction preserves the
    // certificate on the linked-minors instance
    let t = Instant::now();
    use csgin::algebra::{parse_polynomial, Monomial, Polynomial, Variable};
    use csgin::multigrading::substitute_linear;

    // duplicate column 3: blocks (3,3,6,3,3); the first minor uses rows 1..3
    // of column 3, the second uses duplicate rows 4..6
    let ring = RingConfig::new(vec![3, 3, 6, 3, 3], PRIME).unwrap();
    let d1 = minor(&ring, &MinorSpec::new(vec![1, 2, 3], vec![1, 2, 3]).unwrap()).unwrap();
    let d2 = {
        // build the plain minor on columns 3,4,5, then push column 3 onto the
        // duplicate rows 4..6
        let plain_ring = RingConfig::uniform(5, 3, PRIME).unwrap();
        let plain =
            minor(&plain_ring, &MinorSpec::new(vec![1, 2, 3], vec![3, 4, 5]).unwrap()).unwrap();
        let terms = plain.terms().iter().map(|(m, c)| {
            let mut exps = vec![0u8; ring.var_count()];
            for (v, e) in m.factors(&plain_ring) {
                let row = if v.col == 3 { v.row + 3 } else { v.row };
                exps[ring.position(Variable::new(row, v.col)).unwrap()] = e;
            }
            (Monomial::from_exps(exps), *c)
        });
        Polynomial::from_terms(ring.field(), terms)
    };
    let duplicated = Ideal::new(ring.clone(), vec![d1, d2]);
    let v = check_cs(&duplicated, &TermOrder::degrevlex(), 2, SEED).unwrap();
    assert_eq!(v.status, CsStatus::Certified, "duplicated instance");

    // specialize the duplicates back: x[3+k,3] -> x[k,3] for k = 1..3
    let mut current = duplicated;
    for _ in 0..3 {
        let ring = current.ring().clone();
        // the duplicate block occupies the last three rows of column 3
        let dup_row = ring.block_size(3);
        let image = parse_polynomial(&format!("x[{},3]", dup_row - 3), &ring).unwrap();
        current = substitute_linear(&current, Variable::new(dup_row, 3), &image).unwrap();
    }
    assert_eq!(current.ring().blocks(), &[3, 3, 3, 3, 3]);
    let v = check_cs(&current, &TermOrder::degrevlex(), 2, SEED).unwrap();
    assert_eq!(v.status, CsStatus::Certified, "specialized instance");

    // and the specialized ideal is the plain linked-minors instance
    let plain_ring = RingConfig::uniform(5, 3, PRIME).unwrap();
    let p1 = minor(&plain_ring, &MinorSpec::new(vec![1, 2, 3], vec![1, 2, 3]).unwrap()).unwrap();
    let p2 = minor(&plain_ring, &MinorSpec::new(vec![1, 2, 3], vec![3, 4, 5]).unwrap()).unwrap();
    let plain = Ideal::new(plain_ring, vec![p1, p2]);
    assert_eq!(current.ring(), plain.ring());
    for (a, b) in current.gens().iter().zip(plain.gens()) {
        assert_eq!(a, b);
    }
    eprintln!(
        "ACCEPTANCE 5b duplication/section invariance: PASS ({:.1?})",
        t.elapsed()
    );
}
