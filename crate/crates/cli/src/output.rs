//! JSON shapes emitted by the commands. Rationals are `"num/den"` strings
//! (integers without a denominator, `"inf"` for infinity).

use serde::{Deserialize, Serialize};

use padic_eisen::eisenstein::Certificate;
use padic_eisen::tables::TableEntry;
use padic_eisen::{galois_info, CanonicalRep, Prime, RamificationProfile, TypeTag, ValQ};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Galois {
    pub d_1: u64,
    pub d_2: u64,
    pub shape: String,
    pub inertia: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Classification {
    #[serde(rename = "type")]
    pub type_tag: String,
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<u64>,
    pub a: u64,
    pub canonical: String,
    pub d_f: String,
    pub u_f: String,
    pub galois: Galois,
}

impl Classification {
    pub fn new(t: TypeTag, rep: &CanonicalRep) -> Self {
        let row = Row::new(rep);
        Classification {
            type_tag: t.to_string(),
            family: row.family,
            lambda: row.lambda,
            a: row.a,
            canonical: row.poly,
            d_f: row.d_f,
            u_f: row.u_f,
            galois: row.galois,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Canonical,
    Krasner,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equivalent,
    Inequivalent,
    NoCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateOut {
    pub distance: String,
    pub u_f: String,
    pub holds: bool,
}

impl From<&Certificate> for CertificateOut {
    fn from(c: &Certificate) -> Self {
        CertificateOut {
            distance: c.distance.to_string(),
            u_f: c.u_f.to_string(),
            holds: c.holds,
        }
    }
}

/// `equivalent` is `null` exactly when the verdict is `no_certificate`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Equivalence {
    pub equivalent: Option<bool>,
    pub verdict: Verdict,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateOut>,
}

impl Equivalence {
    pub fn decided(equivalent: bool, method: Method) -> Self {
        Equivalence {
            equivalent: Some(equivalent),
            verdict: if equivalent { Verdict::Equivalent } else { Verdict::Inequivalent },
            method,
            certificate: None,
        }
    }

    pub fn certified(c: &Certificate) -> Self {
        Equivalence {
            equivalent: c.holds.then_some(true),
            verdict: if c.holds { Verdict::Equivalent } else { Verdict::NoCertificate },
            method: Method::Krasner,
            certificate: Some(c.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Breaks {
    /// `(break, #G_break)` pairs, classical lower numbering.
    pub lower: Vec<(String, u64)>,
    pub upper: Vec<String>,
    pub convention: String,
    pub u_shifted: String,
    pub i_shifted: String,
    pub d_f: String,
}

impl From<&RamificationProfile> for Breaks {
    fn from(p: &RamificationProfile) -> Self {
        Breaks {
            lower: p.lower_breaks.iter().map(|b| (b.at.to_string(), b.card)).collect(),
            upper: p.upper_breaks.iter().map(ValQ::to_string).collect(),
            convention: "classical".into(),
            u_shifted: p.u_shifted.to_string(),
            i_shifted: p.i_shifted.to_string(),
            d_f: p.d_f.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Row {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<u64>,
    pub a: u64,
    pub poly: String,
    pub d_f: String,
    pub u_f: String,
    pub galois: Galois,
}

impl Row {
    pub fn new(rep: &CanonicalRep) -> Self {
        Row::from_entry(&TableEntry { rep: rep.clone(), galois: galois_info(rep) })
    }

    pub fn from_entry(e: &TableEntry) -> Self {
        let p: Prime = e.rep.poly.prime();
        Row {
            family: e.rep.family.to_string(),
            lambda: e.rep.lambda,
            a: e.rep.a,
            poly: e.rep.poly.to_text(),
            d_f: e.rep.d_f.to_string(),
            u_f: e.rep.u_f.to_string(),
            galois: Galois {
                d_1: e.galois.d_1,
                d_2: e.galois.d_2,
                shape: e.galois.shape(p),
                inertia: e.galois.inertia_shape(p),
            },
        }
    }

    pub const TSV_HEADER: &'static str = "family\tlambda\ta\tpoly\td_f\tu_f\tgalois\tinertia";

    pub fn tsv(&self) -> String {
        let lambda = self.lambda.map_or_else(|| "-".to_string(), |l| l.to_string());
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.family, lambda, self.a, self.poly, self.d_f, self.u_f, self.galois.shape, self.galois.inertia
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table {
    pub p: u64,
    pub entries: Vec<Row>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use padic_eisen::eisenstein::{canonical_form, classify_type, krasner_certificate};
    use padic_eisen::{profile, representatives, EisensteinPoly};
    use serde::de::DeserializeOwned;

    fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(v: &T) {
        let s = serde_json::to_string(v).unwrap();
        assert_eq!(&serde_json::from_str::<T>(&s).unwrap(), v);
    }

    fn ep(c: &[i64]) -> EisensteinPoly {
        EisensteinPoly::from_i64(3, c).unwrap()
    }

    #[test]
    fn classification_shape() {
        let f = ep(&[6, 0, 0]);
        let c = Classification::new(classify_type(&f).unwrap(), &canonical_form(&f).unwrap());
        round_trip(&c);
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["type"], "<0>");
        assert_eq!(v["family"], "F3");
        assert_eq!(v["a"], 2);
        assert_eq!(v["canonical"], "x^3+21");
        assert_eq!(v["d_f"], "5/3");
        assert_eq!(v["u_f"], "5/2");
        assert!(v.get("lambda").is_none());
    }

    #[test]
    fn strict_fields() {
        let s = r#"{"lower":[],"upper":[],"convention":"classical","u_shifted":"1","i_shifted":"0","d_f":"1","extra":1}"#;
        assert!(serde_json::from_str::<Breaks>(s).is_err());
        let s = r#"{"equivalent":true,"verdict":"maybe","method":"oracle"}"#;
        assert!(serde_json::from_str::<Equivalence>(s).is_err());
    }

    #[test]
    fn all_shapes_round_trip() {
        round_trip(&Breaks::from(&profile(&ep(&[3, 0, 0])).unwrap()));
        let cert = krasner_certificate(&ep(&[3, 0, 0]), &ep(&[6, 0, 0])).unwrap();
        let e = Equivalence::certified(&cert);
        assert_eq!(e.verdict, Verdict::NoCertificate);
        assert_eq!(e.equivalent, None);
        round_trip(&e);
        round_trip(&Equivalence::decided(false, Method::Oracle));
        let reps = representatives(Prime::new(5).unwrap()).unwrap();
        round_trip(&Table { p: 5, entries: reps.iter().map(Row::new).collect() });
    }
}
