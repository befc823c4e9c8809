use super::params::{SrdParams, Srg};
use super::tensor::{expected_structure_constants, RELATION_BLOCKS, RELATION_TRANSPOSE};
use crate::coherent::Pick;
use crate::coherent::{
    canonical_relabel, sigma, structure_constants, CoherentConfiguration, Designation,
    RelabelRecord, StructureTensor,
};
use crate::error::{Error, Result};
use crate::exact::Matrix;

/// Reads the parameter tuple off a configuration already in canonical
/// `σ1..σ10` layout, then checks that the tuple reproduces every
/// intersection number.
pub fn extract_srd_params(c: &CoherentConfiguration) -> Result<SrdParams> {
    let t: StructureTensor<i64> = structure_constants(c)?;
    check_layout(&t)?;
    let p = |i: usize, j: usize, k: usize| *t.get(sigma(i), sigma(j), sigma(k));
    let v = |i: usize| *t.valency(sigma(i));
    let params = SrdParams {
        srg1: Srg::new(v(1) + v(2) + v(3), v(2), p(2, 2, 2), p(2, 2, 3)),
        srg2: Srg::new(v(4) + v(5) + v(6), v(5), p(5, 5, 5), p(5, 5, 6)),
        S1: v(9),
        S2: v(7),
        N1: p(2, 7, 7),
        P1: p(2, 7, 8),
        N2: p(5, 9, 9),
        P2: p(5, 9, 10),
        a1: p(9, 7, 5),
        b1: p(9, 7, 6),
        a2: p(7, 9, 2),
        b2: p(7, 9, 3),
    };
    let expected: StructureTensor<i64> = expected_structure_constants(&params)?;
    if let Some((i, j, k)) = expected.first_difference(&t) {
        return Err(Error::Precondition(format!(
            "p[{}][{}][{}]: configuration has {}, parameters predict {}",
            i + 1,
            j + 1,
            k + 1,
            t.get(i, j, k),
            expected.get(i, j, k)
        )));
    }
    Ok(params)
}

/// [`canonical_relabel`] followed by [`extract_srd_params`].
pub fn relabel_and_extract(
    c: &CoherentConfiguration,
    designation: &Designation,
) -> Result<(SrdParams, CoherentConfiguration, RelabelRecord)> {
    let (canon, record) = canonical_relabel(c, designation)?;
    let params = extract_srd_params(&canon)?;
    Ok((params, canon, record))
}

/// Default designation for a configuration built from `incidence`: `σ7` is
/// the color of the first incident (row, column) pair, so the given
/// incidence relation becomes `σ7` whenever it survives refinement intact.
pub fn incidence_designation(incidence: &Matrix<i64>) -> Designation {
    let n1 = incidence.rows();
    let first = (0..n1)
        .flat_map(|r| (0..incidence.cols()).map(move |c| (r, c)))
        .find(|&(r, c)| *incidence.get(r, c) == 1);
    Designation {
        sigma7: match first {
            Some((r, c)) => Pick::ContainingCell(r, n1 + c),
            None => Pick::default(),
        },
        ..Designation::default()
    }
}

fn check_layout(t: &StructureTensor<i64>) -> Result<()> {
    if t.rank() != 10 {
        return Err(Error::TypeMismatch(format!(
            "expected 10 relations in canonical layout, found {}",
            t.rank()
        )));
    }
    for i in 0..10 {
        if t.block(i) != RELATION_BLOCKS[i] || t.transpose_of(i) != RELATION_TRANSPOSE[i] {
            return Err(Error::TypeMismatch(format!(
                "relation σ{} is not in canonical position; apply canonical_relabel first",
                i + 1
            )));
        }
    }
    if *t.get(sigma(1), sigma(1), sigma(1)) != 1 || *t.get(sigma(4), sigma(4), sigma(4)) != 1 {
        return Err(Error::TypeMismatch(
            "σ1 and σ4 must be the fiber identities".into(),
        ));
    }
    Ok(())
}
