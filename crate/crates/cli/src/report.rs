use std::collections::BTreeMap;
use std::fmt;

/// Sorted `key: value` lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    entries: BTreeMap<String, String>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.insert(key.into(), value.to_string());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    /// Copies every entry of `other` under `prefix.`.
    pub fn nest(&mut self, prefix: &str, other: Report) {
        for (k, v) in other.entries {
            self.entries.insert(format!("{prefix}.{k}"), v);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            writeln!(out, "{k}: {v}")?;
        }
        Ok(())
    }
}

pub fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lines_are_sorted_by_key() {
        let mut r = Report::new();
        r.set("simples", 2);
        r.set("dim", 6);
        r.set("cartan_det", 2);
        assert_eq!(r.to_string(), "cartan_det: 2\ndim: 6\nsimples: 2\n");
    }

    #[test]
    fn nested_keys_and_lists() {
        let mut inner = Report::new();
        inner.set("dim", 9);
        let mut r = Report::new();
        r.nest("b", inner);
        r.set("x", list(&[1, 2]));
        assert_eq!(r.get("b.dim"), Some("9"));
        assert_eq!(r.get("x"), Some("1,2"));
    }
}
