"""
Container de Injeção de Dependências.
Configura os serviços de cálculo e suas dependências.
"""

from dependency_injector import containers, providers

from app.core.settings import get_settings
from app.services.cable_calculator import CableCalculator
from app.services.diagram_builder import DiagramBuilder
from app.services.root_verifier import RootOfUnityVerifier
from app.services.state_sum_oracle import StateSumOracle


class Container(containers.DeclarativeContainer):
    """Container de Injeção de Dependências."""

    wiring_config = containers.WiringConfiguration(
        modules=[
            "app.cli.expand",
            "app.cli.jones",
            "app.cli.oracle",
            "app.cli.roots",
            "app.cli.satellite",
            "app.cli.companion",
        ]
    )

    # Settings
    settings = providers.Singleton(get_settings)

    # Cable Services
    cable_calculator = providers.Singleton(CableCalculator)

    # Oracle Services
    diagram_builder = providers.Singleton(DiagramBuilder)

    state_sum_oracle = providers.Singleton(
        StateSumOracle,
        max_crossings=settings.provided.max_crossings,
        workers=settings.provided.oracle_workers,
        parallel_min_states=settings.provided.parallel_min_states,
        builder=diagram_builder,
        calculator=cable_calculator,
    )

    # Root-of-unity Services
    root_verifier = providers.Singleton(
        RootOfUnityVerifier,
        calculator=cable_calculator,
        tolerance=settings.provided.root_tolerance,
        lemma2_tolerance=settings.provided.lemma2_tolerance,
    )
