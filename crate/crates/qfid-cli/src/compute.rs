//! `qfid compute`: fidelity between two density-matrix files.

use qfid::fidelity::{fidelity, FidelityMethod};
use qfid::states::DensityMatrix;
use qfid::{matfile, Error, Result};
use std::path::Path;

fn load(path: &Path) -> Result<DensityMatrix> {
    DensityMatrix::validate(matfile::read_matrix_from_path(path)?)
}

pub fn run(rho_path: &Path, sigma_path: &Path, method: &str) -> Result<i32> {
    let rho = load(rho_path)?;
    let sigma = load(sigma_path)?;
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            left: rho.dim(),
            right: sigma.dim(),
        });
    }

    if method == "all" {
        let mut raws = Vec::with_capacity(FidelityMethod::ALL.len());
        for m in FidelityMethod::ALL {
            let f = fidelity(&rho, &sigma, m)?;
            println!("{} {}", m.tag(), f.value());
            raws.push(f.raw());
        }
        let spread = raws.iter().cloned().fold(f64::MIN, f64::max)
            - raws.iter().cloned().fold(f64::MAX, f64::min);
        println!("spread {spread:e}");
    } else {
        let m: FidelityMethod = method.parse()?;
        let f = fidelity(&rho, &sigma, m)?;
        println!("{} {}", m.tag(), f.value());
    }
    Ok(0)
}
