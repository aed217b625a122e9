use super::{EdgeDocument, ParseError};

/// One `child<TAB>parent` edge per line. Blank lines and lines starting
/// with `#` are skipped.
pub fn parse_edgelist(text: &str, source_name: &str) -> Result<EdgeDocument, ParseError> {
    let mut doc = EdgeDocument {
        source_name: source_name.to_string(),
        ..Default::default()
    };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 2 {
            return Err(ParseError::new(
                source_name,
                line_no,
                format!("expected 2 tab-separated fields, found {}", fields.len()),
            ));
        }
        if fields.iter().any(|f| f.is_empty()) {
            return Err(ParseError::new(source_name, line_no, "empty element id"));
        }
        doc.push(fields[0].to_string(), fields[1].to_string(), line_no);
    }
    Ok(doc)
}
