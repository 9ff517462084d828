//! Command-line operands: partition text, inline JSON, or `@path`.

use std::fs;

use ncsym::{Algebra, Basis, Element, Error, ModuleSum, Result, SetPartition};

/// Reads the file behind `@path`, or returns the argument itself.
pub fn resolve(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| Error::Syntax { input: arg.to_string(), reason: e.to_string() }),
        None => Ok(arg.trim().to_string()),
    }
}

fn is_json(text: &str) -> bool {
    text.starts_with('{') || text.starts_with('[')
}

/// A partition given as text (`1,3|2`) or as a JSON array of blocks.
pub fn partition(arg: &str) -> Result<SetPartition> {
    let text = resolve(arg)?;
    if is_json(&text) {
        Ok(serde_json::from_str(&text)?)
    } else {
        text.parse()
    }
}

/// An `NCSym` element: a JSON element, or a partition read as a basis vector
/// of `basis` (default `m`).
pub fn element(arg: &str, basis: Option<Basis>) -> Result<Element> {
    let text = resolve(arg)?;
    if text.starts_with('{') {
        return Ok(serde_json::from_str(&text)?);
    }
    let a = if is_json(&text) { serde_json::from_str(&text)? } else { text.parse()? };
    Ok(Element::basis_vector(basis.unwrap_or(Basis::M), a))
}

/// A module class: JSON, or a partition naming a simple module.
pub fn module_sum(arg: &str, algebra: Algebra) -> Result<ModuleSum> {
    let text = resolve(arg)?;
    if text.starts_with('{') {
        let sum: ModuleSum = serde_json::from_str(&text)?;
        if sum.algebra() != algebra {
            return Err(Error::TagMismatch { left: algebra.to_string(), right: sum.algebra().to_string() });
        }
        return Ok(sum);
    }
    Ok(ModuleSum::simple(algebra, partition(&text)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn operands() {
        assert_eq!(partition("1,3|2").unwrap(), "1,3|2".parse().unwrap());
        assert_eq!(partition("[[1,3],[2]]").unwrap(), "1,3|2".parse().unwrap());
        let e = element("1|2", Some(Basis::P)).unwrap();
        assert_eq!(e.basis(), Basis::P);
        let json = r#"{"basis":"x","terms":[{"coef":"-2","partition":[[1]]}]}"#;
        let e = element(json, None).unwrap();
        assert_eq!(e.coefficient(&"1".parse().unwrap()), BigInt::from(-2));
        assert_eq!(partition("1,1").unwrap_err().name(), "OverlapError");
        assert!(module_sum(r#"{"algebra":"join","terms":[]}"#, Algebra::Meet).is_err());
    }

    #[test]
    fn files() {
        let path = std::env::temp_dir().join(format!("ncsym-input-{}.json", std::process::id()));
        fs::write(&path, r#"{"basis":"m","terms":[{"coef":"1","partition":[[1,2]]}]}"#).unwrap();
        let e = element(&format!("@{}", path.display()), None).unwrap();
        assert_eq!(e, Element::basis_vector(Basis::M, "1,2".parse().unwrap()));
        fs::remove_file(path).unwrap();
        assert_eq!(element("@/nonexistent/ncsym", None).unwrap_err().name(), "SyntaxError");
    }
}
