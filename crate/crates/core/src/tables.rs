//! The complete list of canonical representatives for totally ramified
//! degree-`p` extensions of `Q_p`, with their Galois-group data.

use num_integer::Integer;

use crate::eisenstein::{CanonicalRep, Family};
use crate::error::{Error, Result};
use crate::padic::{multiplicative_order, Prime};

/// Galois group `C_p : C_{d_2}` of the normal closure and inertia group
/// `C_p : C_{d_1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaloisInfo {
    /// `gcd(p - 1, lambda)`; `p - 1` outside family F1.
    pub g: u64,
    /// Order of `a * lambda` mod `p`; 1 outside family F1.
    pub m: u64,
    pub d_1: u64,
    pub d_2: u64,
    pub is_cyclic: bool,
}

impl GaloisInfo {
    pub fn shape(&self, p: Prime) -> String {
        group_name(p, self.d_2)
    }

    pub fn inertia_shape(&self, p: Prime) -> String {
        group_name(p, self.d_1)
    }
}

fn group_name(p: Prime, d: u64) -> String {
    if d == 1 {
        format!("C_{p}")
    } else {
        format!("C_{p} : C_{d}")
    }
}

pub fn galois_info(rep: &CanonicalRep) -> GaloisInfo {
    let p = rep.poly.prime();
    let q = p.get() - 1;
    match rep.family {
        Family::F1 => {
            let lambda = rep.lambda.expect("F1 carries lambda");
            let g = q.gcd(&lambda);
            let m = multiplicative_order((rep.a * lambda) % p.get(), p);
            let d_2 = q / (q / m).gcd(&g);
            GaloisInfo {
                g,
                m,
                d_1: q / g,
                d_2,
                is_cyclic: d_2 == 1,
            }
        }
        Family::F2 => GaloisInfo {
            g: q,
            m: 1,
            d_1: 1,
            d_2: 1,
            is_cyclic: true,
        },
        Family::F3 => GaloisInfo {
            g: q,
            m: 1,
            d_1: q,
            d_2: q,
            is_cyclic: false,
        },
    }
}

/// All `p^2` representatives: F1 by `(lambda, a)`, then F2 and F3 by `a`.
pub fn representatives(p: Prime) -> Result<Vec<CanonicalRep>> {
    if !p.is_odd() {
        return Err(Error::EvenPrime);
    }
    let q = p.get();
    let mut out = Vec::with_capacity((q * q) as usize);
    for lambda in 1..q {
        for a in 1..q {
            if (lambda, a) != (q - 1, q - 1) {
                out.push(CanonicalRep::f1(p, lambda, a)?);
            }
        }
    }
    for a in 0..q {
        out.push(CanonicalRep::f2(p, a)?);
    }
    for a in 0..q {
        out.push(CanonicalRep::f3(p, a)?);
    }
    Ok(out)
}

/// A representative with its Galois data attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub rep: CanonicalRep,
    pub galois: GaloisInfo,
}

pub fn table(p: Prime) -> Result<Vec<TableEntry>> {
    Ok(representatives(p)?
        .into_iter()
        .map(|rep| {
            let galois = galois_info(&rep);
            TableEntry { rep, galois }
        })
        .collect())
}
