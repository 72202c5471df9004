//! Sup-norm minimization over a hyperplane in C[0,1]: the minimum m/(m-1)
//! decreases toward 1 and is never 1.

use infconv::repro::{example16_paper_sequence, Example16Instance};

fn main() -> infconv::Result<()> {
    let report = example16_paper_sequence(&[4, 10, 100, 1000, 10000])?;
    println!("{:>6} {:>14} {:>14} {:>14}", "m", "ramp c(u)", "sup |u|", "minimum");
    for r in &report.rows {
        println!("{:6} {:14.10} {:14.10} {:14.10}", r.m, r.ramp_constraint, r.sup_norm, r.discrete_minimum);
    }
    println!("all checks pass: {}", report.passed);

    let u = Example16Instance::ramp(8)?.normalized();
    println!("normalized ramp at m = 8: {:?}", u.node_values);
    Ok(())
}
