//! Matrix factorizations of a hypersurface polynomial: verification,
//! cokernel rank, and extracting a kernel syzygy from a column-deleted
//! factor.

use adehk::field::Field;
use adehk::matfac::{
    column_choice_check, kernel_vector, sample_e8_factorization, sample_duality_witness,
    mat_mul,
};
use adehk::poly::format_poly;

const VARS: [&str; 3] = ["X", "Y", "Z"];

fn main() {
    let field = Field::prime(7);
    let (mf, order) = sample_e8_factorization(&field);

    println!("F = {}", format_poly(&mf.f, &VARS, &field));
    println!("phi:");
    for row in &mf.phi {
        let cells: Vec<String> = row.iter().map(|p| format_poly(p, &VARS, &field)).collect();
        println!("  [{}]", cells.join(", "));
    }

    let outcome = mf.verify(&field, &order);
    println!("phi*psi = psi*phi = F*I: {}", outcome.valid);
    println!("reduced (no unit entries): {}", outcome.reduced);
    println!(
        "rank of coker(phi) as a module over the hypersurface: {}",
        mf.coker_rank(&field, &order).unwrap()
    );

    // deleting a column of psi leaves an n x (n-1) presentation whose
    // kernel over the hypersurface is a single line; its generator is a
    // syzygy vector
    for j in 0..mf.n {
        let psi_j = mf.psi_without_column(j);
        let ok = column_choice_check(&psi_j, &mf.f, &field, &order);
        print!("column {j} deleted: rank check {}", if ok { "ok" } else { "FAILED" });
        if ok {
            let v = kernel_vector(&psi_j, &mf.f, &field, &order, None).unwrap();
            let entries: Vec<String> =
                v.iter().map(|p| format_poly(p, &VARS, &field)).collect();
            print!(", kernel generator ({})", entries.join(", "));
        }
        println!();
    }

    // the duality witness alpha conjugates phi to its transpose
    let alpha = sample_duality_witness(&field);
    let lhs = mat_mul(&alpha, &mf.phi, &field, &order);
    let phi_t: Vec<Vec<_>> = (0..mf.n)
        .map(|i| (0..mf.n).map(|j| mf.phi[j][i].clone()).collect())
        .collect();
    let rhs = mat_mul(&phi_t, &alpha, &field, &order);
    println!("alpha * phi == phi^T * alpha: {}", lhs == rhs);
}
