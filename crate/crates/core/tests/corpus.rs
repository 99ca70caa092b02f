use esn_core::matroid::DEFAULT_ENUMERATION_CAP;
use esn_core::oracle::random::{corpus_graphic, corpus_uniform_or_partition, GeneratedInstance};
use esn_core::oracle::{
    adjacency_graph, brute_force_frontiers, check_connectivity, verify_report, verify_sweep, FrontierTruth,
};
use esn_core::solvers::{adjacency_esn_sweep, global_esn_sweep, Solver};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check(inst: &GeneratedInstance) {
    let (g, costs) = inst.build().unwrap();
    let truth = brute_force_frontiers(&g, &costs, DEFAULT_ENUMERATION_CAP).unwrap();
    for solver in Solver::ALL {
        let report = solver.run(&g, &costs, DEFAULT_ENUMERATION_CAP).unwrap();
        let violations = verify_report(&report, &truth);
        assert!(violations.is_empty(), "{solver} on {inst:?}: {violations:?}");
    }
    let sweep = adjacency_esn_sweep(&g, &costs).unwrap();
    assert_eq!(verify_sweep(&sweep, &truth), vec![], "{inst:?}");
    let sweep = global_esn_sweep(&truth.bases, &costs).unwrap();
    assert_eq!(verify_sweep(&sweep, &truth), vec![], "{inst:?}");

    let d = adjacency_graph(&truth.bases);
    assert!(check_connectivity(&d, &truth.x_se), "D_SE disconnected on {inst:?}");
    for lambda in FrontierTruth::event_lambdas(&g, &costs) {
        let optimal = truth.optimal_at(&lambda);
        assert!(
            check_connectivity(&d, &optimal),
            "D[X_λ] disconnected at {lambda} on {inst:?}"
        );
    }
}

#[test]
fn graphic_corpus_agrees_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..150 {
        check(&corpus_graphic(&mut rng));
    }
}

#[test]
fn uniform_and_partition_corpus_agrees_with_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xb10c);
    for _ in 0..150 {
        check(&corpus_uniform_or_partition(&mut rng));
    }
}
