use mwidth::checks::{generate, run_check, verify, CheckConfig, Theorem};
use mwidth::rng::trial_seed;
use mwidth::{Caps, Execution};

fn summary(theorem: Theorem, exec: Execution) -> mwidth::checks::CheckSummary {
    let mut cfg = CheckConfig::new(theorem, 99, 40);
    cfg.exec = exec;
    run_check(&cfg)
}

#[test]
fn execution_modes_agree() {
    for t in Theorem::ALL {
        assert_eq!(summary(t, Execution::Sequential), summary(t, Execution::Parallel), "{}", t.id());
    }
}

#[test]
fn failures_replay_from_their_seed() {
    let s = summary(Theorem::ImwIwLiteral, Execution::Parallel);
    assert!(s.failed > 0, "the literal construction should fail somewhere in 40 trials");
    let trials: Vec<u64> = s.failures.iter().map(|f| f.trial).collect();
    assert!(trials.windows(2).all(|w| w[0] < w[1]), "failures are reported in trial order");
    for f in &s.failures {
        assert_eq!(f.seed, trial_seed(99, f.trial));
        let inst = generate(Theorem::ImwIwLiteral, f.trial, f.seed, Theorem::ImwIwLiteral.default_max_size());
        assert_eq!(inst.to_value(), f.instance);
        assert!(verify(Theorem::ImwIwLiteral, &inst, Caps::default()).is_err());
        assert!(verify(Theorem::ImwIw, &inst, Caps::default()).is_ok());
    }
}

#[test]
fn tight_caps_are_solver_errors_not_violations() {
    let mut cfg = CheckConfig::new(Theorem::TreeEquality, 1, 10);
    cfg.caps = Caps::uniform(1);
    let s = run_check(&cfg);
    assert!(s.failed > 0);
    assert!(s.first_violation().is_none());
    assert!(s.failures.iter().all(|f| f.kind == "solver_error"));
}
