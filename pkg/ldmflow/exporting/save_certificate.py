import json
from ..EquilibriumCertificate import EquilibriumCertificate


def save_certificate(certificate: EquilibriumCertificate, filename: str):
    """Save an equilibrium certificate as json, with the residuals restricted to the flow support."""
    residuals = {}
    for path_id in certificate.residuals:
        times, values = certificate.support_residuals(path_id)
        residuals[path_id] = [{"departure_time": float(t), "residual": float(r)} for t, r in zip(times, values)]
    data = {"converged": certificate.converged,
            "iterations": certificate.iterations,
            "gap": certificate.gap,
            "max_support_residual": certificate.max_support_residual,
            "od_minimum": [{"od": list(od), "v": value} for od, value in certificate.od_minimum.items()],
            "support_residuals": residuals}
    with open(filename, 'w') as f:
        json.dump(data, f, indent=1)
