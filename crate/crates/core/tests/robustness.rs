use csgin::algebra::TermOrder;
use csgin::combinatorics::{predict_gin_generators, Graph};
use csgin::models::binomial_edge_ideal;
use csgin::multigrading::{check_cs, multigraded_gin, CsStatus};

#[test]
fn seed_independence_and_k5() {
    // verdicts and gins must not depend on the seed at p = 32003
    let path4 = Graph::new(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
    let predicted = predict_gin_generators(&path4, 3, 32003).unwrap();
    for seed in [1u64, 2, 99, 123456] {
        let ideal = binomial_edge_ideal(&path4, 3, 32003).unwrap();
        let rep = multigraded_gin(&ideal, &TermOrder::degrevlex(), 2, seed).unwrap();
        assert!(rep.stable, "seed {seed}");
        assert_eq!(rep.gin.unwrap(), predicted, "seed {seed}");
    }

    // headroom: K5 with m = 3 (15 variables, 30 quadrics)
    let t = std::time::Instant::now();
    let k5 = Graph::complete(5);
    let ideal = binomial_edge_ideal(&k5, 3, 32003).unwrap();
    let rep = multigraded_gin(&ideal, &TermOrder::degrevlex(), 2, 42).unwrap();
    assert!(rep.stable);
    let predicted = predict_gin_generators(&k5, 3, 32003).unwrap();
    assert_eq!(rep.gin.unwrap(), predicted);
    let v = check_cs(&ideal, &TermOrder::degrevlex(), 2, 7).unwrap();
    assert_eq!(v.status, CsStatus::Certified);
    eprintln!("K5 m=3: prediction matches, certified in {:?}", t.elapsed());
}
