//! Aligned plain-text and LaTeX tables.

pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Self {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.headers.len());
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let width = |s: &str| s.chars().count();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| width(h)).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(width(cell));
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                s.push_str(cell);
                if i + 1 < cells.len() {
                    s.extend(std::iter::repeat_n(' ', w - width(cell)));
                }
            }
            s.push('\n');
            s
        };
        let mut out = line(&self.headers);
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        out.push_str(&line(&rule));
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }

    pub fn render_latex(&self) -> String {
        let mut out = format!("\\begin{{tabular}}{{{}}}\n\\hline\n", "l".repeat(self.headers.len()));
        out.push_str(&self.headers.join(" & "));
        out.push_str(" \\\\\n\\hline\n");
        for row in &self.rows {
            out.push_str(&row.join(" & "));
            out.push_str(" \\\\\n");
        }
        out.push_str("\\hline\n\\end{tabular}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned_columns() {
        let mut t = Table::new(["root", "m"]);
        t.row(vec!["α1".into(), "1".into()]);
        t.row(vec!["α1+α2+α3".into(), "3".into()]);
        let s = t.render();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "root      m");
        assert_eq!(lines[2], "α1        1");
        assert_eq!(lines[3], "α1+α2+α3  3");
    }

    #[test]
    fn latex_rows() {
        let mut t = Table::new(["S", "dim"]);
        t.row(vec!["$\\emptyset$".into(), "6".into()]);
        assert!(t.render_latex().contains("$\\emptyset$ & 6 \\\\"));
    }
}
