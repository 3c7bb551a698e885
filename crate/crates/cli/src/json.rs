//! JSON forms of verdicts. Scalars are strings in the text syntax so that
//! values stay exact.

use serde::Serialize;
use trop_core::greens::Witness;
use trop_core::{GreenVerdict, IsoDescriptor, TropMatrix, TropVector};

pub type MatrixJson = Vec<Vec<String>>;

pub fn matrix(m: &TropMatrix) -> MatrixJson {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
        .collect()
}

fn vector(v: &TropVector) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictJson {
    pub relation: String,
    pub holds: bool,
    pub domain: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    pub refutation: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WitnessJson {
    Factors { factors: Vec<FactorJson> },
    Bridge { iso: IsoJson, bridge: MatrixJson },
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorJson {
    pub order: String,
    pub direction: String,
    pub matrix: MatrixJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoJson {
    pub orientation: String,
    /// 1-based, as in the text form.
    pub sigma: Vec<usize>,
    pub lambdas: Vec<String>,
    pub source: Vec<Vec<String>>,
    pub target: Vec<Vec<String>>,
}

fn iso(f: &IsoDescriptor) -> IsoJson {
    IsoJson {
        orientation: f.orientation().tag().to_string(),
        sigma: f.sigma().iter().map(|i| i + 1).collect(),
        lambdas: f.lambdas().iter().map(|l| l.to_string()).collect(),
        source: f.source().iter().map(vector).collect(),
        target: f.target().iter().map(vector).collect(),
    }
}

pub fn verdict(v: &GreenVerdict) -> VerdictJson {
    let witness = v.witness.as_ref().map(|w| match w {
        Witness::Factors(fs) => WitnessJson::Factors {
            factors: fs
                .iter()
                .map(|f| FactorJson {
                    order: f.order.tag().to_string(),
                    direction: f.direction.tag().to_string(),
                    matrix: matrix(&f.matrix),
                })
                .collect(),
        },
        Witness::Bridge { iso: f, bridge } => WitnessJson::Bridge {
            iso: iso(f),
            bridge: matrix(bridge),
        },
    });
    VerdictJson {
        relation: v.relation.tag().to_string(),
        holds: v.holds,
        domain: v.domain.tag().to_string(),
        witness,
        refutation: v.refutation.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use trop_core::greens::{decide, DOptions};
    use trop_core::{Domain, Relation};

    #[test]
    fn verdict_shape() {
        let a = TropMatrix::parse_rows("0 -inf; -inf 1/2").unwrap();
        let v = decide(Relation::R, &a, &a, Domain::Tropical, &DOptions::default()).unwrap();
        let j = serde_json::to_value(verdict(&v)).unwrap();
        assert_eq!(j["relation"], "r");
        assert_eq!(j["holds"], true);
        assert_eq!(j["witness"]["kind"], "factors");
        assert_eq!(
            j["witness"]["factors"][0]["matrix"]
                .as_array()
                .unwrap()
                .len(),
            2
        );

        let d = decide(Relation::D, &a, &a, Domain::Tropical, &DOptions::default()).unwrap();
        let j = serde_json::to_value(verdict(&d)).unwrap();
        assert_eq!(j["witness"]["kind"], "bridge");
        assert_eq!(j["witness"]["bridge"][1][1], "1/2");
    }
}
