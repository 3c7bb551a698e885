//! Text form of a verdict.
//!
//! ```text
//! r yes t
//! factor leq-r forward
//! <matrix>
//! factor leq-r backward
//! <matrix>
//! ```
//!
//! `D` witnesses use `iso` followed by a descriptor and `bridge` followed by
//! a matrix; negative verdicts list `reason ...` lines.

use std::fmt;
use std::str::FromStr;

use super::{Direction, Factor, GreenVerdict, Relation, Witness};
use crate::duality::IsoDescriptor;
use crate::error::{Result, TropError};
use crate::scalar::Domain;
use crate::text::Reader;

impl fmt::Display for GreenVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let answer = if self.holds { "yes" } else { "no" };
        writeln!(f, "{} {answer} {}", self.relation, self.domain)?;
        match &self.witness {
            Some(Witness::Factors(fs)) => {
                for x in fs {
                    writeln!(f, "factor {} {}", x.order, x.direction.tag())?;
                    write!(f, "{}", x.matrix)?;
                }
            }
            Some(Witness::Bridge { iso, bridge }) => {
                writeln!(f, "iso")?;
                write!(f, "{iso}")?;
                writeln!(f, "bridge")?;
                write!(f, "{bridge}")?;
            }
            None => {}
        }
        for r in &self.refutation {
            writeln!(f, "reason {r}")?;
        }
        Ok(())
    }
}

impl FromStr for GreenVerdict {
    type Err = TropError;

    fn from_str(text: &str) -> Result<Self> {
        let mut reader = Reader::new(text);
        let (no, head) = reader.next_tokens("verdict header `relation yes|no domain`")?;
        let [(c1, rel), (c2, answer), (c3, dom)] = head[..] else {
            return Err(TropError::parse(
                no,
                1,
                "verdict header must be `relation yes|no domain`",
            ));
        };
        let relation: Relation = rel
            .parse()
            .map_err(|m: String| TropError::parse(no, c1, m))?;
        let holds = match answer {
            "yes" => true,
            "no" => false,
            _ => return Err(TropError::parse(no, c2, "expected `yes` or `no`")),
        };
        let domain: Domain = dom
            .parse()
            .map_err(|_| TropError::parse(no, c3, format!("unknown domain `{dom}`")))?;

        let mut factors = Vec::new();
        let mut bridge = None;
        let mut refutation = Vec::new();
        while let Some(line) = reader.peek() {
            if let Some(reason) = line.strip_prefix("reason ") {
                refutation.push(reason.trim().to_string());
                reader.next_line("reason")?;
            } else if line == "iso" {
                reader.next_line("iso")?;
                let iso = IsoDescriptor::read(&mut reader)?;
                reader.expect("bridge")?;
                bridge = Some((iso, reader.read_matrix()?));
            } else {
                let (no, toks) = reader.next_tokens("factor")?;
                let [(_, "factor"), (c1, ord), (c2, dir)] = toks[..] else {
                    return Err(TropError::parse(
                        no,
                        1,
                        "expected `factor <order> <direction>`, `iso` or `reason ...`",
                    ));
                };
                let order = match ord {
                    "leq-r" => Relation::LeqR,
                    "leq-l" => Relation::LeqL,
                    _ => {
                        return Err(TropError::parse(
                            no,
                            c1,
                            "factor order must be leq-r or leq-l",
                        ))
                    }
                };
                let direction = match dir {
                    "forward" => Direction::Forward,
                    "backward" => Direction::Backward,
                    _ => {
                        return Err(TropError::parse(
                            no,
                            c2,
                            "direction must be forward or backward",
                        ))
                    }
                };
                factors.push(Factor {
                    order,
                    direction,
                    matrix: reader.read_matrix()?,
                });
            }
        }
        let witness = match (bridge, factors.is_empty()) {
            (Some((iso, bridge)), true) => Some(Witness::Bridge { iso, bridge }),
            (None, false) => Some(Witness::Factors(factors)),
            (None, true) => None,
            (Some(_), false) => {
                return Err(TropError::parse(
                    1,
                    1,
                    "a verdict cannot carry both factors and a bridge",
                ))
            }
        };
        Ok(GreenVerdict {
            relation,
            holds,
            domain,
            witness,
            refutation,
        })
    }
}
