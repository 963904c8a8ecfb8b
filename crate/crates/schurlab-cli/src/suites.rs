//! Verification suites behind `schurlab verify`.

use serde::Serialize;

use schurlab::algebra::Engine;
use schurlab::certificate::Certificate;
use schurlab::coideal::{
    generator_table, transferred_generator_table, verify_coideal_relations, verify_i_formulas, verify_j_counting,
    JFamily,
};
use schurlab::duality::{kl_comparisons, verify_parabolic_kl, verify_tensor_positivity, verify_zeta_standard, TensorSpaces};
use schurlab::schur_a::{
    canonical_tables, epsilon_period, slice, verify_affine_delta_generators, verify_canonical_soundness,
    verify_df_oracle, verify_xi, TypeA,
};
use schurlab::stability::{
    verify_affine_comult_positivity, verify_embedding_positivity, verify_idempotented_comult_positivity,
    verify_transfer_positivity, Kind,
};
use schurlab::{Result, SchurError};

use crate::AlgebraType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Epsilon,
    Xi,
    PositivityA,
    PositivityAffine,
    PositivityJ,
    PositivityI,
    Tensor,
    Relations,
    OracleXcheck,
}

/// Parameters of one verify job.
#[derive(Clone, Debug, Serialize)]
pub struct Params {
    pub suite: Suite,
    #[serde(rename = "type")]
    pub kind: AlgebraType,
    pub n: usize,
    pub d: u32,
    pub split: Option<(u32, u32)>,
    pub spread: u32,
    pub q_list: Vec<usize>,
}

#[derive(Serialize)]
pub struct Report {
    pub suite: Suite,
    pub parameters: Params,
    pub status: &'static str,
    pub version: &'static str,
    pub certificates: Vec<Certificate>,
}

fn splits(p: &Params) -> Vec<u32> {
    match p.split {
        Some((d1, _)) => vec![d1],
        None => (0..=p.d).collect(),
    }
}

fn need(p: &Params, allowed: &[AlgebraType]) -> Result<()> {
    if allowed.contains(&p.kind) {
        Ok(())
    } else {
        Err(SchurError::Validation(format!("suite {:?} does not apply to type {:?}", p.suite, p.kind)))
    }
}

fn type_a_engine(p: &Params) -> (Engine<TypeA>, Vec<schurlab::Mat>) {
    let periodic = p.kind == AlgebraType::AffineA;
    let fam = if periodic { TypeA::affine(p.n) } else { TypeA::finite(p.n) };
    (Engine::new(fam), slice(p.n, p.d, periodic, p.spread))
}

pub fn run(p: Params) -> Result<Report> {
    use AlgebraType::*;
    let mut certs = Vec::new();
    match p.suite {
        Suite::Epsilon => {
            need(&p, &[A, AffineA])?;
            let (eng, mats) = type_a_engine(&p);
            certs.push(verify_canonical_soundness(&eng, &mats)?);
        }
        Suite::Xi => {
            need(&p, &[A, AffineA])?;
            let (eng, mats) = type_a_engine(&p);
            let tables = canonical_tables(&eng, &mats)?;
            certs.push(verify_xi(&tables, epsilon_period(eng.family()), &[-2, -1, 0, 1, 2]));
        }
        Suite::PositivityA => {
            need(&p, &[A])?;
            for d1 in splits(&p) {
                certs.push(verify_idempotented_comult_positivity(Kind::A, p.n, p.d, d1)?);
            }
            if p.d >= p.n as u32 {
                certs.push(verify_transfer_positivity(Kind::A, p.n, p.d)?);
            }
        }
        Suite::PositivityAffine => {
            need(&p, &[AffineA])?;
            for d1 in splits(&p) {
                certs.push(verify_affine_delta_generators(p.n, d1, p.d - d1)?);
                certs.push(verify_affine_comult_positivity(p.n, p.d, d1, p.spread)?);
            }
        }
        Suite::PositivityJ | Suite::PositivityI => {
            let kind = if p.suite == Suite::PositivityJ { Kind::J } else { Kind::I };
            need(&p, &[if kind == Kind::J { Jmath } else { Imath }])?;
            for d1 in splits(&p) {
                certs.push(verify_idempotented_comult_positivity(kind, p.n, p.d, d1)?);
            }
            certs.push(verify_embedding_positivity(kind, p.n, p.d)?);
            if p.d >= kind.step(p.n) {
                certs.push(verify_transfer_positivity(kind, p.n, p.d)?);
            }
            if kind == Kind::I {
                certs.push(verify_i_formulas(p.n, p.d)?);
            }
        }
        Suite::Tensor => {
            need(&p, &[Jmath])?;
            let ts = TensorSpaces::new(p.d as usize, p.n)?;
            certs.push(verify_zeta_standard(&ts)?);
            certs.push(verify_tensor_positivity(&ts)?);
            certs.push(verify_parabolic_kl(&kl_comparisons(&ts)?, p.n, p.d as usize));
        }
        Suite::Relations => {
            need(&p, &[Jmath])?;
            let fam = JFamily::new(p.n)?;
            let eng = Engine::new(fam.clone());
            let mut direct = verify_coideal_relations(&eng, p.d, &generator_table(&fam, p.d)?)?;
            direct.theorem.push_str(":generators");
            certs.push(direct);
            let mut moved = verify_coideal_relations(&eng, p.d, &transferred_generator_table(&fam, p.d)?)?;
            moved.theorem.push_str(":transferred");
            certs.push(moved);
        }
        Suite::OracleXcheck => {
            need(&p, &[A, Jmath])?;
            if p.kind == A {
                certs.push(verify_df_oracle(p.n, p.d, &p.q_list)?);
            } else {
                certs.push(verify_j_counting(p.n, p.d, &p.q_list)?);
            }
        }
    }
    let status = if certs.iter().all(|c| c.passed()) { "pass" } else { "fail" };
    Ok(Report { suite: p.suite, parameters: p, status, version: env!("CARGO_PKG_VERSION"), certificates: certs })
}
