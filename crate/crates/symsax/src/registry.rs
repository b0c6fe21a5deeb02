//! Built-in metadata for the 45-dataset evaluation suite: split sizes,
//! class counts, and series lengths used to validate loaded archives.

use std::fmt;

/// Broad origin category of a dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DatasetType {
    Simulated,
    Motion,
    Image,
    Sensor,
    Ecg,
    Spectro,
}

impl fmt::Display for DatasetType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DatasetType::Simulated => "Simulated",
            DatasetType::Motion => "Motion",
            DatasetType::Image => "Image",
            DatasetType::Sensor => "Sensor",
            DatasetType::Ecg => "ECG",
            DatasetType::Spectro => "Spectro",
        };
        f.write_str(s)
    }
}

/// Expected shape of one archive dataset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DatasetMeta {
    pub name: &'static str,
    pub type_tag: DatasetType,
    pub train_size: usize,
    pub test_size: usize,
    pub class_count: usize,
    pub series_length: usize,
}

const fn row(
    name: &'static str,
    type_tag: DatasetType,
    train_size: usize,
    test_size: usize,
    class_count: usize,
    series_length: usize,
) -> DatasetMeta {
    DatasetMeta {
        name,
        type_tag,
        train_size,
        test_size,
        class_count,
        series_length,
    }
}

use DatasetType::*;

/// The evaluation suite, in its published order.
pub const REGISTRY: [DatasetMeta; 45] = [
    row("synthetic control", Simulated, 300, 300, 6, 60),
    row("Gun_Point", Motion, 50, 150, 2, 150),
    row("CBF", Simulated, 30, 900, 3, 128),
    row("FaceAll", Image, 560, 1690, 14, 131),
    row("OSULeaf", Image, 200, 242, 6, 427),
    row("SwedishLeaf", Image, 500, 625, 15, 128),
    row("Trace", Sensor, 100, 100, 4, 275),
    row("FaceFour", Image, 24, 88, 4, 350),
    row("Lighting2", Sensor, 60, 61, 2, 637),
    row("Lighting7", Sensor, 70, 73, 7, 319),
    row("ECG200", Ecg, 100, 100, 2, 96),
    row("Adiac", Image, 390, 391, 37, 176),
    row("Yoga", Image, 300, 3000, 2, 426),
    row("Fish", Image, 175, 175, 7, 463),
    row("Plane", Sensor, 105, 105, 7, 144),
    row("Car", Sensor, 60, 60, 4, 577),
    row("Beef", Spectro, 30, 30, 5, 470),
    row("Coffee", Spectro, 28, 28, 2, 286),
    row("OliveOil", Spectro, 30, 30, 4, 570),
    row("CinCECGTorso", Sensor, 40, 1380, 4, 1639),
    row("ChlorineConcentration", Sensor, 467, 3840, 3, 166),
    row("DiatomSizeReduction", Image, 16, 306, 4, 345),
    row("ECGFiveDays", Ecg, 23, 861, 2, 136),
    row("FacesUCR", Image, 200, 2050, 14, 131),
    row("Haptics", Motion, 155, 308, 5, 1092),
    row("InlineSkate", Motion, 100, 550, 7, 1882),
    row("ItalyPowerDemand", Sensor, 67, 1029, 2, 24),
    row("MedicalImages", Image, 381, 760, 10, 99),
    row("MoteStrain", Sensor, 20, 1252, 2, 84),
    row("SonyAIBORobotSurface1", Sensor, 20, 601, 2, 70),
    row("SonyAIBORobotSurface2", Sensor, 27, 953, 2, 65),
    row("Symbols", Image, 25, 995, 6, 398),
    row("TwoLeadECG", Ecg, 23, 1139, 2, 82),
    row("InsectWingbeatSound", Sensor, 220, 1980, 11, 256),
    row("ArrowHead", Image, 36, 175, 3, 251),
    row("BeetleFly", Image, 20, 20, 2, 512),
    row("BirdChicken", Image, 20, 20, 2, 512),
    row("Herring", Image, 64, 64, 2, 512),
    row("ProximalPhalanxTW", Image, 400, 205, 6, 80),
    row("ToeSegmentation1", Motion, 40, 228, 2, 277),
    row("ToeSegmentation2", Motion, 36, 130, 2, 343),
    row("DistalPhalanxOutlineAgeGroup", Image, 400, 139, 3, 80),
    row("DistalPhalanxOutlineCorrect", Image, 600, 276, 2, 80),
    row("DistalPhalanxTW", Image, 400, 139, 6, 80),
    row("WordsSynonyms", Image, 267, 638, 25, 270),
];

/// Metadata row for `name`, if it is part of the suite.
pub fn find(name: &str) -> Option<&'static DatasetMeta> {
    REGISTRY.iter().find(|m| m.name == name)
}

/// All suite dataset names, in order.
pub fn dataset_names() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|m| m.name)
}
