use euclid_alg::distributivity::{
    additive_witness, check_lemma_condition, distributes_over_gcd, fib, fib_multiple_property,
    fib_witness, mersenne_witness, NatFunction,
};
use euclid_alg::Integer;
use num_traits::Zero;

type Witness = Box<dyn Fn(u64, u64) -> (Integer, Integer)>;

#[test]
fn fibonacci_and_mersenne_distribute() {
    assert!(distributes_over_gcd(&NatFunction::fibonacci(), 24).passed());
    for k in [2, 3, 5] {
        let f = NatFunction::mersenne(k).unwrap();
        let report = distributes_over_gcd(&f, 24);
        assert!(report.passed(), "{report}");
    }
}

#[test]
fn fib_multiples_divide() {
    for k in 1..=20 {
        for n in 0..=10 {
            assert!(
                fib_multiple_property(n, k).unwrap(),
                "fib({k}) does not divide fib({})",
                n * k
            );
        }
    }
}

#[test]
fn lemma_condition_implies_distributivity() {
    let mut cases: Vec<(NatFunction, Witness)> =
        vec![(NatFunction::fibonacci(), Box::new(fib_witness))];
    for k in 1..=6 {
        cases.push((
            NatFunction::mersenne(k).unwrap(),
            Box::new(mersenne_witness(k)),
        ));
    }
    for c in 0..=6 {
        cases.push((NatFunction::scale(c), Box::new(additive_witness)));
    }
    for (f, witness) in &cases {
        let lemma = check_lemma_condition(f, witness, 16);
        assert!(lemma.passed(), "{lemma}");
        let report = distributes_over_gcd(f, 16);
        let positive_failures: Vec<_> = report
            .counterexamples
            .iter()
            .filter(|c| c.iter().all(|v| !v.is_zero()))
            .collect();
        assert!(
            positive_failures.is_empty(),
            "{}: {positive_failures:?}",
            f.name()
        );
        if f.at_zero().is_zero() {
            assert!(report.passed(), "{report}");
        }
    }
}

#[test]
fn values_are_exact_beyond_machine_words() {
    // fib(100) and 3^60 - 1 both overflow u64.
    assert_eq!(fib(100).to_string(), "354224848179261915075");
    let f = NatFunction::mersenne(3).unwrap();
    assert_eq!(f.eval(60).to_string(), "42391158275216203514294433200");
}
