use sphere_dubins::oracle::{random_instance, SplitMix64};
use sphere_dubins::{
    path_length, plan, plan_target, sample_path, verify_candidate, Configuration, PathFamily,
    SolverTolerances, TurningRadius,
};

#[test]
fn best_never_exceeds_generating_path() {
    let mut rng = SplitMix64::new(4242);
    let tol = SolverTolerances::default();
    for i in 0..1000u64 {
        let family = PathFamily::ALL[(rng.next_u64() % 12) as usize];
        let r = TurningRadius::new(0.05 + 0.9 * rng.next_f64()).unwrap();
        let (angles, alpha) = random_instance(family, r, i);
        let report = plan_target(&alpha, r, &tol).unwrap();
        let best = report.best().expect("forward-composed target has a path");
        assert!(
            best.length <= path_length(family, &angles, r) + 1e-9,
            "{family} seed {i}"
        );
        assert!(verify_candidate(best.family, &best.angles, r, &alpha) <= 1e-9);
        for pair in report.candidates.windows(2) {
            assert!(pair[0].length <= pair[1].length);
        }
    }
}

#[test]
fn plans_are_deterministic() {
    let r = TurningRadius::new(0.45).unwrap();
    let (_, alpha) = random_instance(PathFamily::Rlrlr, r, 5);
    let tol = SolverTolerances::default();
    assert_eq!(
        plan_target(&alpha, r, &tol).unwrap(),
        plan_target(&alpha, r, &tol).unwrap()
    );
}

#[test]
fn sampled_best_path_reaches_goal() {
    let r = TurningRadius::new(0.5).unwrap();
    let (_, alpha) = random_instance(PathFamily::Lrl, r, 11);
    let start = Configuration::new(sphere_dubins::segments::rot_g(0.4)).unwrap();
    let goal = start.advance(alpha.rotation());
    let report = plan(&start, &goal, r, &SolverTolerances::default()).unwrap();
    let best = report.best().unwrap();
    let pts = sample_path(best, &start, 25).unwrap();
    let n = best.family.kinds().len();
    assert_eq!(pts.len(), n * 25 - (n - 1));
    let (end, want) = (pts.last().unwrap().position(), goal.position());
    for k in 0..3 {
        assert!((end[k] - want[k]).abs() <= 1e-9);
    }
}
