//! Element files and table output.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use schurlab::algebra::{Elem, Tensor};
use schurlab::{LaurentPoly, Mat, Result, SchurError};

/// Ambient data stored with every element file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ambient {
    #[serde(rename = "type")]
    pub kind: String,
    pub n: usize,
    pub d: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub split: Option<(u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementFile {
    pub basis: String,
    pub ambient: Ambient,
    pub terms: Elem,
}

#[derive(Clone, Debug, Serialize)]
pub struct TensorFile {
    pub basis: String,
    pub ambient: Ambient,
    pub terms: Tensor,
}

pub fn read_element(path: &Path) -> Result<ElementFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| SchurError::Validation(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| SchurError::Validation(format!("{}: {e}", path.display())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Where output goes: a file or standard output.
pub struct Sink<'a> {
    pub path: Option<&'a Path>,
    pub format: Format,
}

fn json_cell<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("serializable")
}

impl Sink<'_> {
    fn emit(&self, bytes: Vec<u8>) -> Result<()> {
        let io = |e: std::io::Error| SchurError::Arithmetic(format!("write failed: {e}"));
        match self.path {
            Some(p) => std::fs::write(p, bytes).map_err(io),
            None => std::io::stdout().write_all(&bytes).map_err(io),
        }
    }

    fn csv(&self, header: &[&str], rows: Vec<Vec<String>>) -> Result<()> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| SchurError::Arithmetic(format!("csv: {e}"));
        w.write_record(header).map_err(err)?;
        for r in rows {
            w.write_record(&r).map_err(err)?;
        }
        self.emit(w.into_inner().map_err(|e| SchurError::Arithmetic(format!("csv: {e}")))?)
    }

    pub fn json<T: Serialize>(&self, x: &T) -> Result<()> {
        let mut s = serde_json::to_string_pretty(x).expect("serializable");
        s.push('\n');
        self.emit(s.into_bytes())
    }

    pub fn element(&self, f: &ElementFile) -> Result<()> {
        match self.format {
            Format::Json => self.json(f),
            Format::Csv => self.csv(
                &["matrix", "coeff"],
                f.terms.iter().map(|(m, c)| vec![json_cell(m), c.to_string()]).collect(),
            ),
        }
    }

    pub fn tensor(&self, f: &TensorFile) -> Result<()> {
        match self.format {
            Format::Json => self.json(f),
            Format::Csv => self.csv(
                &["left", "right", "coeff"],
                f.terms
                    .iter()
                    .map(|(k, c)| vec![json_cell(&k[0]), json_cell(&k[1]), c.to_string()])
                    .collect(),
            ),
        }
    }

    /// Canonical basis tables `{A} = Σ P_{A,A'} [A']`.
    pub fn kl_tables(&self, tables: &[(Mat, Elem)]) -> Result<()> {
        match self.format {
            Format::Json => {
                #[derive(Serialize)]
                struct Row<'a> {
                    top: &'a Mat,
                    expansion: &'a Elem,
                }
                self.json(&tables.iter().map(|(top, expansion)| Row { top, expansion }).collect::<Vec<_>>())
            }
            Format::Csv => self.csv(
                &["top", "matrix", "p"],
                tables
                    .iter()
                    .flat_map(|(t, e)| e.iter().map(move |(m, c)| vec![json_cell(t), json_cell(m), c.to_string()]))
                    .collect(),
            ),
        }
    }

    /// A table indexed by `Π_{d,n}`: `A ↦ Σ c_B B`.
    pub fn pi_table(&self, rows: &BTreeMap<Vec<u32>, BTreeMap<Vec<u32>, LaurentPoly>>, basis: &str) -> Result<()> {
        match self.format {
            Format::Json => {
                #[derive(Serialize)]
                struct Term<'a> {
                    b: &'a [u32],
                    coeff: &'a LaurentPoly,
                }
                #[derive(Serialize)]
                struct Row<'a> {
                    a: &'a [u32],
                    image: Vec<Term<'a>>,
                }
                #[derive(Serialize)]
                struct Out<'a> {
                    basis: &'a str,
                    rows: Vec<Row<'a>>,
                }
                let rows = rows
                    .iter()
                    .map(|(a, img)| Row { a, image: img.iter().map(|(b, coeff)| Term { b, coeff }).collect() })
                    .collect();
                self.json(&Out { basis, rows })
            }
            Format::Csv => self.csv(
                &["a", "b", "coeff"],
                rows.iter()
                    .flat_map(|(a, img)| img.iter().map(move |(b, c)| vec![json_cell(a), json_cell(b), c.to_string()]))
                    .collect(),
            ),
        }
    }

    pub fn report<T: Serialize>(&self, report: &T, certs: &[schurlab::certificate::Certificate]) -> Result<()> {
        match self.format {
            Format::Json => self.json(report),
            Format::Csv => {
                let mut rows = Vec::new();
                for c in certs {
                    let status = if c.passed() { "pass" } else { "fail" };
                    let params = json_cell(&c.parameters);
                    if c.witnesses.is_empty() {
                        rows.push(vec![c.theorem.clone(), params.clone(), status.into(), c.checked.to_string(), String::new()]);
                    }
                    for w in &c.witnesses {
                        rows.push(vec![c.theorem.clone(), params.clone(), status.into(), c.checked.to_string(), w.clone()]);
                    }
                }
                self.csv(&["theorem", "parameters", "status", "checked", "witness"], rows)
            }
        }
    }
}
