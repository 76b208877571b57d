from src.analyzer.classify import AcyclicityReport, classify
from src.analyzer.report import classification_frame, export_report

__all__ = ["AcyclicityReport", "classify", "classification_frame", "export_report"]
