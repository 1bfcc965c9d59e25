//! Input validation shared by the operation boundaries. Non-finite values
//! are rejected here instead of being allowed to poison downstream sums.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub(crate) fn equal_len(left: usize, right: usize, context: &'static str) -> Result<()> {
    if left != right {
        return Err(Error::Shape {
            context,
            left,
            right,
        });
    }
    Ok(())
}

pub(crate) fn non_empty(len: usize, context: &'static str) -> Result<()> {
    if len == 0 {
        return Err(Error::Empty { context });
    }
    Ok(())
}

pub(crate) fn finite_real(x: f64, context: &'static str) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::NonFinite { context });
    }
    Ok(())
}

pub(crate) fn finite_complex(c: Complex64, context: &'static str) -> Result<()> {
    if !(c.re.is_finite() && c.im.is_finite()) {
        return Err(Error::NonFinite { context });
    }
    Ok(())
}

pub(crate) fn all_finite_real(xs: &[f64], context: &'static str) -> Result<()> {
    for &x in xs {
        finite_real(x, context)?;
    }
    Ok(())
}

pub(crate) fn all_finite_complex<'a, I>(cs: I, context: &'static str) -> Result<()>
where
    I: IntoIterator<Item = &'a Complex64>,
{
    for &c in cs {
        finite_complex(c, context)?;
    }
    Ok(())
}
