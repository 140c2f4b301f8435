//! Regenerates the corpora under `fixtures/`.
//!
//! ```text
//! cargo run -p termflux --example make_fixtures -- crates/termflux/fixtures
//! ```
//!
//! Output is a pure function of this file. Filler text never contains a word
//! of any fixture term, so every occurrence is one placed here on purpose.

use std::fs;
use std::path::{Path, PathBuf};

use termflux::core::{Category, DocId, Language, YearMonth};
use termflux::manifest::{Manifest, ManifestEntry};

const FILLER_FR: &[&str] = &[
    "Le rapport annuel présente les résultats obtenus dans les exploitations de la région.",
    "Les techniciens ont visité chaque parcelle au printemps puis en automne.",
    "Une réunion publique a permis de discuter des aides versées aux fermes familiales.",
    "La chambre locale publie chaque mois une lettre sur les marchés et les prix.",
    "Les rendements varient selon le sol, la pluie et le choix des semences.",
    "Plusieurs coopératives ont signé un accord sur la collecte du lait.",
    "Le conseil municipal souhaite encourager les circuits courts et la vente directe.",
    "Les consommateurs lisent les étiquettes avec attention avant chaque achat.",
];

const FILLER_IT: &[&str] = &[
    "Il rapporto annuale descrive i risultati ottenuti nelle aziende della regione.",
    "I tecnici hanno visitato ogni parcella in primavera e in autunno.",
    "Una riunione pubblica ha discusso gli aiuti versati alle piccole aziende.",
    "La camera locale pubblica ogni mese una lettera su mercati e prezzi.",
    "Le rese variano secondo il suolo, la pioggia e la scelta delle sementi.",
    "Diverse cooperative hanno firmato un accordo sulla raccolta del latte.",
    "Il consiglio comunale vuole sostenere la vendita diretta nei paesi.",
];

/// Sentence carrying one term form.
fn carrier(lang: &str, form: &str, k: usize) -> String {
    let fr = [
        "Le dossier mentionne {} dans la section consacrée aux pratiques.",
        "Selon les auteurs, {} reste un sujet central pour la filière.",
        "On retrouve {} dans les documents transmis aux partenaires.",
    ];
    let it = [
        "Il documento cita {} nella parte dedicata alle pratiche.",
        "Secondo gli autori, {} resta un tema centrale per la filiera.",
        "Si ritrova {} nei documenti inviati ai partner.",
    ];
    let templates = if lang == "it" { &it } else { &fr };
    templates[k % templates.len()].replace("{}", form)
}

/// Joins sentences, then pads with filler to exactly `size` characters when
/// `size` is given.
fn compose(lang: &str, sentences: &[String], seed: usize, size: Option<usize>) -> String {
    let filler = if lang == "it" { FILLER_IT } else { FILLER_FR };
    let mut text = String::new();
    for (i, s) in sentences.iter().enumerate() {
        text.push_str(filler[(seed + i) % filler.len()]);
        text.push(' ');
        text.push_str(s);
        text.push('\n');
    }
    let Some(size) = size else {
        text.push_str(filler[seed % filler.len()]);
        text.push('\n');
        return text;
    };
    let mut k = seed;
    while text.chars().count() < size {
        let need = size - text.chars().count();
        let next = filler[k % filler.len()];
        k += 1;
        if next.chars().count() < need {
            text.push_str(next);
            text.push(' ');
        } else {
            // The pad never splits a word: spaces fill the remainder.
            text.push_str(&" ".repeat(need));
        }
    }
    assert_eq!(text.chars().count(), size);
    text
}

struct Fixture {
    dir: PathBuf,
    id: &'static str,
    language: Language,
    terms: &'static str,
    entries: Vec<ManifestEntry>,
}

impl Fixture {
    fn new(root: &Path, id: &'static str, language: Language, terms: &'static str) -> Self {
        Self { dir: root.join(id), id, language, terms, entries: Vec::new() }
    }

    fn doc(&mut self, id: String, text: String, date: YearMonth, category: Category, fast: bool) {
        let path = PathBuf::from("docs").join(format!("{id}.txt"));
        fs::create_dir_all(self.dir.join("docs")).unwrap();
        fs::write(self.dir.join(&path), text).unwrap();
        self.entries.push(ManifestEntry {
            id: DocId::new(id),
            path: Some(path),
            text: None,
            date: Some(date),
            category,
            language: None,
            domain: "agriculture".into(),
            domain_fast_evolving: fast,
            validated: true,
        });
    }

    fn write(self) {
        fs::create_dir_all(&self.dir).unwrap();
        fs::write(self.dir.join("terms.txt"), self.terms).unwrap();
        let manifest = Manifest { id: self.id.into(), language: Some(self.language), documents: self.entries };
        let mut json = serde_json::to_string_pretty(&manifest).unwrap();
        json.push('\n');
        fs::write(self.dir.join("manifest.json"), json).unwrap();
    }
}

fn month(start_year: i32, index: usize) -> YearMonth {
    YearMonth::new(start_year + (index / 12) as i32, (index % 12 + 1) as u8).unwrap()
}

/// 3 categories x 10 documents of 5,000 characters. Per category the
/// document carries `full` full forms, `ana[i]` reductions after the first
/// full form and `cata[i]` reductions before it.
fn trend(root: &Path) {
    let mut f = Fixture::new(
        root,
        "trend",
        Language::Fr,
        "# head|component|component\nmode|de production|biologique\nagriculture|biologique\n",
    );
    let plan: [(Category, usize, [usize; 10], [usize; 10]); 3] = [
        (Category::Vulgarisation, 2, [2, 2, 2, 2, 2, 1, 1, 1, 1, 1], [1, 1, 1, 0, 0, 0, 0, 0, 0, 0]),
        (Category::Pedagogique, 4, [2, 2, 1, 1, 1, 1, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
        (Category::Specialise, 8, [1, 1, 0, 0, 0, 0, 0, 0, 0, 0], [0; 10]),
    ];
    let mut n = 0;
    for (c, (category, full, ana, cata)) in plan.into_iter().enumerate() {
        for i in 0..10 {
            let (full_form, reduced_form) = if i % 2 == 0 {
                ("mode de production biologique", "mode de production")
            } else {
                ("agriculture biologique", "agriculture")
            };
            let mut s = Vec::new();
            for _ in 0..cata[i] {
                s.push(reduced_form);
            }
            for k in 0..full {
                s.push(full_form);
                if k < ana[i] {
                    s.push(reduced_form);
                }
            }
            // A non-linear reduction: scanned, but not part of the trees.
            if c == 2 && i >= 5 && i % 2 == 0 {
                s.push("mode biologique");
            }
            let sentences: Vec<String> = s.iter().enumerate().map(|(k, form)| carrier("fr", form, k + i)).collect();
            let text = compose("fr", &sentences, n, Some(5000));
            f.doc(format!("c{}-{:02}", c + 1, i), text, month(2004, n), category, false);
            n += 1;
        }
    }
    f.write();
}

/// Twelve monthly documents; each term's full forms appear in the first
/// half and its reductions only in the second.
fn chrono(root: &Path) {
    let mut f = Fixture::new(
        root,
        "chrono",
        Language::It,
        "metodo|di produzione|biologica\ndegrado|ambientale\ndenominazione|di origine|controllata\n",
    );
    let terms = [
        ("metodo di produzione biologica", "metodo di produzione"),
        ("degrado ambientale", "degrado"),
        ("denominazione di origine controllata", "denominazione di origine"),
    ];
    let categories = [Category::Vulgarisation, Category::Pedagogique, Category::Specialise];
    for i in 0..12 {
        let mut s = Vec::new();
        for (t, (full, reduced)) in terms.iter().enumerate() {
            let count = 1 + (i + t) % 3;
            let form = if i < 6 { full } else { reduced };
            for _ in 0..count {
                s.push(*form);
            }
        }
        let sentences: Vec<String> = s.iter().enumerate().map(|(k, form)| carrier("it", form, k + i)).collect();
        let text = compose("it", &sentences, i, None);
        f.doc(format!("m{:02}", i + 1), text, month(2006, i), categories[i % 3], i % 4 == 0);
    }
    f.write();
}

/// Two admissible 3-complex terms with three attested reductions, plus two
/// terms the census leaves out.
fn census(root: &Path) {
    let mut f = Fixture::new(
        root,
        "census",
        Language::Fr,
        "mode|de production|biologique\n\
         cahier|des charges|biologique\n\
         agriculture|biologique\n\
         dimension|proprement/adv|éthique\n",
    );
    let docs: [&[&str]; 3] = [
        &[
            "mode de production biologique",
            "mode de production",
            "mode de production biologique",
            "mode biologique",
            "mode de production biologique",
        ],
        &[
            "cahier des charges biologique",
            "cahier des charges",
            "mode de production",
            "cahier des charges biologique",
            "cahier des charges",
            "mode de production",
        ],
        &["agriculture biologique", "mode biologique", "dimension proprement éthique", "agriculture biologique"],
    ];
    for (i, forms) in docs.iter().enumerate() {
        let sentences: Vec<String> = forms.iter().enumerate().map(|(k, form)| carrier("fr", form, k)).collect();
        let text = compose("fr", &sentences, i, None);
        let category = [Category::Vulgarisation, Category::Pedagogique, Category::Specialise][i];
        f.doc(format!("f{}", i + 1), text, month(2008, 3 * i), category, false);
    }
    f.write();
}

fn main() {
    let root = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"));
    trend(&root);
    chrono(&root);
    census(&root);
    println!("fixtures written to {}", root.display());
}
