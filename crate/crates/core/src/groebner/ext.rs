//! `Ext^j_S(M, S)` as cohomology of the dualized resolution.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::Degree;

use super::module::{column_degree, kernel, ModulePresentation};
use super::resolution::free_resolution;

/// Presentation of `Ext^j(M, S)`, graded so that the dual of a generator of
/// degree `a` sits in degree `-a`.
pub fn ext_presentation(m: &ModulePresentation, j: usize) -> Result<ModulePresentation> {
    let ring = m.ring();
    let n = ring.nvars();
    if j > n {
        return Err(Error::InvalidArgument(format!(
            "Ext index {j} exceeds {n} variables"
        )));
    }
    let res = free_resolution(m, n + 1)?;
    let rank_j = res.rank(j);
    if rank_j == 0 {
        return Ok(ModulePresentation::free(ring, Vec::new()));
    }
    let dual_shifts: Vec<Degree> = res.shifts(j).iter().map(|d| [-d[0], -d[1]]).collect();

    // Columns of d_{j+1}^T: row l of d_{j+1}, one per generator of F_j.
    let up = res.differential(j + 1);
    let k_gens: Vec<Vec<Polynomial>> = if up.is_empty() {
        (0..rank_j)
            .map(|l| {
                (0..rank_j)
                    .map(|r| {
                        if r == l {
                            Polynomial::one(ring)
                        } else {
                            Polynomial::zero(ring)
                        }
                    })
                    .collect()
            })
            .collect()
    } else {
        let dual_cols: Vec<Vec<Polynomial>> = (0..rank_j)
            .map(|l| up.iter().map(|col| col[l].clone()).collect())
            .collect();
        kernel(ring, up.len(), &dual_cols)?
    };
    if k_gens.is_empty() {
        return Ok(ModulePresentation::free(ring, Vec::new()));
    }

    // Image of d_j^T: row ρ of d_j for each generator ρ of F_{j-1}.
    let mut image: Vec<Vec<Polynomial>> = Vec::new();
    if j >= 1 {
        let down = res.differential(j);
        for rho in 0..res.rank(j - 1) {
            let col: Vec<Polynomial> = down.iter().map(|c| c[rho].clone()).collect();
            if col.iter().any(|p| !p.is_zero()) {
                image.push(col);
            }
        }
    }

    let p = k_gens.len();
    let mut all = k_gens.clone();
    all.extend(image);
    let relations: Vec<Vec<Polynomial>> = kernel(ring, rank_j, &all)?
        .into_iter()
        .map(|mut c| {
            c.truncate(p);
            c
        })
        .collect();
    let shifts: Vec<Degree> = k_gens
        .iter()
        .map(|c| column_degree(c, &dual_shifts).flatten().unwrap_or([0, 0]))
        .collect();
    Ok(ModulePresentation::new(ring, p, shifts, relations)?.pruned())
}
