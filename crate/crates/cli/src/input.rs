/// Splits on whitespace and commas and parses every token as an integer.
pub fn parse_sequence(text: &str) -> Result<Vec<i64>, String> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| format!("cannot parse {t:?} as an integer"))
        })
        .collect()
}

/// Blank lines and `#` comments carry no sequence.
pub fn is_skippable(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}
