//! The exact Groebner-basis layer used as the independent oracle: bases
//! over small prime fields, quotient dimensions, graded dimensions, and
//! Frobenius-power colengths.

use adehk::field::Field;
use adehk::groebner::{
    buchberger, colength_with_powers, graded_dimensions, quotient_dimension,
};
use adehk::poly::{format_poly, parse_poly, WeightedOrder};
use adehk::AdeRing;

const VARS: [&str; 3] = ["X", "Y", "Z"];

fn main() {
    let field = Field::prime(7);
    let order = WeightedOrder::new(&[15, 10, 6]);

    // the E8 equation plus 7th Frobenius powers of the variables
    let gens: Vec<_> = ["X^2+Y^3+Z^5", "X^7", "Y^7", "Z^7"]
        .iter()
        .map(|s| parse_poly(s, &VARS, &field, &order, None).unwrap())
        .collect();
    let gb = buchberger(&gens, &field, &order);
    println!("Groebner basis of (X^2+Y^3+Z^5, X^7, Y^7, Z^7) over F_7:");
    for g in &gb.gens {
        println!("  {}", format_poly(g, &VARS, &field));
    }
    println!("colength = {}", quotient_dimension(&gb).unwrap());

    // the same number through the one-call oracle, for every q = 7^e
    // that stays small
    let f = AdeRing::e8().defining_poly(&field);
    for q in [7u32, 49] {
        println!(
            "colength of (F, X^{q}, Y^{q}, Z^{q}) = {}",
            colength_with_powers(&f, q, &field, &order).unwrap()
        );
    }

    // graded dimensions of the quotient under the (15, 10, 6) grading:
    // the numerator coefficients of its Hilbert series
    let dims = graded_dimensions(&gb, 40);
    println!("graded dimensions in degrees 0..40: {dims:?}");

    // colengths are independent of the monomial order used
    for weights in [[15i64, 10, 6], [1, 1, 1], [2, 9, 4]] {
        let order = WeightedOrder::new(&weights);
        let gens: Vec<_> = ["X^2+Y^3+Z^5", "X^7", "Y^7", "Z^7"]
            .iter()
            .map(|s| parse_poly(s, &VARS, &field, &order, None).unwrap())
            .collect();
        let gb = buchberger(&gens, &field, &order);
        println!(
            "weights {weights:?}: basis size {}, colength {}",
            gb.gens.len(),
            quotient_dimension(&gb).unwrap()
        );
    }
}
