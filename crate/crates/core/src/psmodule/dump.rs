//! Serializable snapshot of a module for the command line and for failure reports.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::burnside::{burnside_span_dim, BurnsideMethod};
use super::weights::{isotypic_decomposition, weight_table};
use super::{MatrixModule, ModuleKind};
use crate::error::{HeckeError, Result};
use crate::linalg::Matrix;
use crate::rational::format_rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDump {
    pub name: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDump {
    pub eps: Vec<String>,
    pub torus: Vec<i8>,
    pub eigenspace_dim: usize,
    pub generalized_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDump {
    pub rep: String,
    pub values: Vec<i8>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDump {
    pub irreducible: bool,
    pub span_dim: Option<usize>,
    pub submodule_dim: Option<usize>,
    pub method: BurnsideMethod,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDump {
    pub algebra: String,
    pub n: usize,
    pub param: String,
    pub character: Option<String>,
    pub dim: usize,
    pub labels: Vec<String>,
    pub generators: Vec<GeneratorDump>,
    pub weights: Vec<WeightDump>,
    pub blocks: Vec<BlockDump>,
    pub oracle: Option<OracleDump>,
}

fn matrix_strings(a: &Matrix) -> Vec<Vec<String>> {
    a.to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect()
}

impl ModuleDump {
    pub fn new(m: &MatrixModule, with_oracle: bool) -> Result<Self> {
        let algebra = match m.kind() {
            ModuleKind::B => "B".to_string(),
            ModuleKind::D => "D".to_string(),
            ModuleKind::GradedHecke { i } => format!("graded({i})"),
        };
        let generators = m
            .generator_names()
            .into_iter()
            .zip(m.generators())
            .map(|(name, a)| GeneratorDump {
                name,
                matrix: matrix_strings(a),
            })
            .collect();
        let weights = weight_table(m)?
            .entries
            .iter()
            .map(|e| WeightDump {
                eps: e.weight.eps.iter().map(format_rational).collect(),
                torus: e.weight.torus.clone(),
                eigenspace_dim: e.eigenspace.len(),
                generalized_dim: e.generalized_dim,
            })
            .collect();
        let blocks = match (m.kind(), m.character()) {
            (ModuleKind::B | ModuleKind::D, Some(chi)) => isotypic_decomposition(m, &chi.mu)?
                .into_iter()
                .map(|b| BlockDump {
                    rep: b.rep.to_string(),
                    values: b.values,
                    dim: b.basis.len(),
                })
                .collect(),
            _ => Vec::new(),
        };
        let oracle = with_oracle.then(|| {
            let v = burnside_span_dim(m);
            OracleDump {
                irreducible: v.irreducible,
                span_dim: v.span_dim,
                submodule_dim: v.submodule_dim,
                method: v.method,
            }
        });
        Ok(ModuleDump {
            algebra,
            n: m.rank(),
            param: format_rational(m.param()),
            character: m.character().map(ToString::to_string),
            dim: m.dim(),
            labels: m.labels().iter().map(ToString::to_string).collect(),
            generators,
            weights,
            blocks,
            oracle,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("dump serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| HeckeError::Parse(e.to_string()))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algebra {}  n = {}  k = {}  dim = {}", self.algebra, self.n, self.param, self.dim);
        if let Some(c) = &self.character {
            let _ = writeln!(out, "character {c}");
        }
        let _ = writeln!(out, "basis {}", self.labels.join(" "));
        for g in &self.generators {
            let _ = writeln!(out, "{}:", g.name);
            let width = g.matrix.iter().flatten().map(String::len).max().unwrap_or(1);
            for row in &g.matrix {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                let _ = writeln!(out, "  [{}]", cells.join(" "));
            }
        }
        let _ = writeln!(out, "weights:");
        for w in &self.weights {
            let torus: Vec<String> = w.torus.iter().map(|t| if *t > 0 { "+" } else { "-" }.to_string()).collect();
            let _ = writeln!(
                out,
                "  ({}) {}  eigen {}  generalized {}",
                w.eps.join(","),
                torus.concat(),
                w.eigenspace_dim,
                w.generalized_dim
            );
        }
        if !self.blocks.is_empty() {
            let _ = writeln!(out, "blocks:");
            for b in &self.blocks {
                let _ = writeln!(out, "  {}  values {:?}  dim {}", b.rep, b.values, b.dim);
            }
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(
                out,
                "oracle {} ({:?}{}{})",
                if o.irreducible { "irreducible" } else { "reducible" },
                o.method,
                o.span_dim.map(|s| format!(", span {s}")).unwrap_or_default(),
                o.submodule_dim.map(|s| format!(", submodule {s}")).unwrap_or_default()
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::{build_m, FullCharacter};
    use super::*;
    use crate::algebra::AlgebraContext;
    use crate::rational::rat;

    #[test]
    fn json_round_trip() {
        let c = AlgebraContext::new(2, rat(1)).unwrap();
        let x = FullCharacter::new(vec![rat(1), rat(0)], "++".parse().unwrap()).unwrap();
        let m = build_m(&x, &c).unwrap();
        let d = ModuleDump::new(&m, true).unwrap();
        assert_eq!(d.generators[0].matrix, vec![vec!["1", "-2"], vec!["0", "0"]]);
        assert_eq!(ModuleDump::from_json(&d.to_json()).unwrap(), d);
        assert!(d.oracle.as_ref().unwrap().irreducible);
        assert!(d.render_text().contains("e1:"));
    }
}
