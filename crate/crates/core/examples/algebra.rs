//! The algebra generated by X, Y, Z: raw relations, the standardized
//! presentation, the Casimir element and a q-Hahn subalgebra.

use pastro::algebra::{
    affine_generators, casimir, casimir_scalar, qhahn_embedding, structure_constants,
    verify_raw_relations, verify_standardized_relations, CasimirCoefficients,
};
use pastro::{rat, QParams};

pub fn run() -> pastro::Result<()> {
    let params = QParams::new(rat(1, 2), rat(3, 1), rat(1, 5))?;
    let (alpha1, alpha2) = structure_constants(&params);
    println!("alpha1 = {alpha1}, alpha2 = {alpha2}");

    for check in verify_raw_relations(&params)
        .into_iter()
        .chain(verify_standardized_relations(&params))
    {
        println!("{check}");
        assert!(check.passed());
    }

    let gens = affine_generators(&params)?;
    let q_cas = casimir(&gens, &CasimirCoefficients::new(&params));
    println!("Q = {:?}", casimir_scalar(&q_cas));
    assert!(q_cas.commutator(&gens.y).is_zero());

    for mu in [rat(0, 1), rat(2, 3), rat(-5, 2)] {
        let report = qhahn_embedding(&params, &mu)?;
        let k = &report.constants;
        println!(
            "mu = {mu}: gamma1 = {} gamma2 = {} gamma3 = {} degenerate = {}",
            k.gamma1, k.gamma2, k.gamma3, report.degenerate
        );
        assert!(report.checks.iter().all(|c| c.passed()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
