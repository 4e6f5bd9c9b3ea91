//! Prints the seven space dimensions and exactness verdicts for every
//! built-in catalog triple.

use liecoh::catalog;
use liecoh::field::Rationals;
use liecoh::seven::SevenTermContext;

fn main() {
    println!(
        "{:<42} {:<28} exact",
        "triple (g / h / M)", "dims of the seven spaces"
    );
    for fx in catalog::fixtures(Rationals) {
        let ctx = SevenTermContext::new(&fx.algebra, &fx.ideal, &fx.module).unwrap();
        let rep = ctx.assemble_and_verify();
        println!(
            "{:<42} {:<28} {}",
            fx.name,
            format!("{:?}", rep.dims),
            if rep.all_exact() { "yes" } else { "NO" }
        );
    }
}
