"""Valores imutáveis do domínio: polinômios, elementos de skein, diagramas e cabos."""
