// Ruling out abelian complex structures, and searching for them.

use abelcx::catalog::{by_id, four_dim};
use abelcx::obstructions::{codim1_obstruction, free_two_step_obstruction, search_abelian_j, Evidence};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for id in ["derext-R2", "derext-h1", "derext-h2", "affR", "RxH1"] {
        let e = by_id(id)?;
        let r = codim1_obstruction(id, &e.algebra)?;
        println!("codim-1 test on {id} (dim {}): {}", e.algebra.dim(), r.verdict_str());
    }

    for rank in [3, 4] {
        let r = free_two_step_obstruction(rank)?;
        if let Evidence::Commutant { j_span_dim, commutant_dim, .. } = &r.evidence {
            println!("free two-step rank {rank}: {} (span of j_z {j_span_dim}, commutant {commutant_dim})", r.verdict_str());
        }
    }

    for id in ["S8", "S1"] {
        let e = four_dim(id)?;
        let r = search_abelian_j(id, &e.algebra, 10_000)?;
        println!("search on {id}: {} → {:?}", r.verdict_str(), r.witness().map(|j| j.matrix().clone()));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
