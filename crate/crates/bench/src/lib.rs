//! Fixed inputs shared by the benchmarks.

use padic_eisen::{EisensteinPoly, Prime};

/// Degree-`p` polynomials of each type, plus one multi-break example.
pub fn fixtures() -> Vec<(&'static str, EisensteinPoly)> {
    let ep = |p, c: &[i64]| EisensteinPoly::from_i64(p, c).expect("fixture is Eisenstein");
    vec![
        ("p3_type1", ep(3, &[3, 3, 0])),
        ("p3_type0_a1v2", ep(3, &[6, 9, 0])),
        ("p5_type2", ep(5, &[5, 0, 10, 0, 0])),
        ("p7_type0", ep(7, &[14, 49, 0, 0, 0, 0, 0])),
        ("p3_deg9", ep(3, &[3, 0, 0, 3, 0, 0, 0, 0, 0])),
    ]
}

pub fn prime(p: u64) -> Prime {
    Prime::new(p).expect("prime")
}
