#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Writes the SKOS fixture ontologies under data/ontologies/."""
import pathlib
import sys
from xml.sax.saxutils import escape, quoteattr

MO = "http://purl.org/ontology/mo/mit#"
EX = "http://example.org/ontology/"

# id -> (scheme iri, parent (iri, en, pt) or None, [(iri, en, pt or None)])
ONTOLOGIES = {
    "music_ontology": (
        "http://purl.org/ontology/mo/instruments#Musical_instruments",
        (MO + "Percussion", "Percussion", "Percussão"),
        [
            (MO + "Drums", "Drums", "Bateria"),
            (MO + "Cymbal", "Cymbal", "Prato"),
            (MO + "Snare_drum", "Snare drum", "Caixa"),
            (MO + "Drumstick", "Drumstick", "Baqueta"),
        ],
        [
            (MO + "Bass_guitar", "Bass", "Baixo"),
            (MO + "Guitar", "Guitar", "Guitarra"),
            (MO + "Keyboard", "Keyboard", "Teclado"),
            (MO + "String", "String", "Corda"),
            (MO + "Microphone", "Microphone", "Microfone"),
            (MO + "Piano", "Piano", None),
            (MO + "Violin", "Violin", None),
        ],
    ),
    "computer_ontology": (
        EX + "computer#Scheme", None, [],
        [
            ("Network", "Network", "Rede"), ("Screen", "Screen", "Tela"),
            ("Database", "Database", "Banco"), ("Folder", "Folder", "Pasta"),
            ("Board", "Board", "Placa"), ("Cable", "Cable", "Cabo"),
            ("Battery", "Battery", "Bateria"), ("Mouse", "Mouse", "Mouse"),
            ("Key", "Key", "Tecla"), ("Port", "Port", "Porta"),
            ("Memory", "Memory", "Memória"), ("Window", "Window", "Janela"),
            ("Charger", "Charger", "Carregador"), ("Printer", "Printer", "Impressora"),
        ],
    ),
    "vehicle_ontology": (
        EX + "vehicle#Scheme", None, [],
        [
            ("Battery", "Battery", "Bateria"), ("SparkPlug", "Spark plug", "Vela"),
            ("Seat", "Seat", "Banco"), ("Gear", "Gear", "Marcha"),
            ("Gearbox", "Gearbox", "Câmbio"), ("Headlight", "Headlight", "Farol"),
            ("SteeringWheel", "Steering wheel", "Volante"), ("Tire", "Tire", "Pneu"),
            ("Trunk", "Trunk", "Porta-malas"), ("Engine", "Engine", "Motor"),
            ("Hood", "Hood", "Capô"), ("Brake", "Brake", "Freio"),
        ],
    ),
    "sports_ontology": (
        EX + "sports#Scheme", None, [],
        [
            ("Sail", "Sail", "Vela"), ("Net", "Net", "Rede"), ("Team", "Team", "Time"),
            ("Match", "Match", "Partida"), ("Court", "Court", "Quadra"),
            ("Bench", "Bench", "Banco"), ("Oar", "Oar", "Remo"),
            ("Surfboard", "Surfboard", "Prancha"), ("Ball", "Ball", "Bola"),
            ("Goal", "Goal", "Gol"), ("Race", "Race", "Corrida"),
            ("Field", "Field", "Campo"), ("Boat", "Boat", "Barco"),
        ],
    ),
    "finance_ontology": (
        EX + "finance#Scheme", None, [],
        [
            ("Bank", "Bank", "Banco"), ("StockExchange", "Stock exchange", "Bolsa"),
            ("Account", "Account", "Conta"), ("ExchangeRate", "Exchange rate", "Câmbio"),
            ("Interest", "Interest", "Juros"), ("Share", "Share", "Ação"),
            ("Loan", "Loan", "Empréstimo"), ("Check", "Check", "Cheque"),
            ("Credit", "Credit", "Crédito"),
        ],
    ),
}


def concept(iri, en, pt, scheme, indent, inner=""):
    pad = " " * indent
    out = [f"{pad}<skos:Concept rdf:about={quoteattr(iri)}>",
           f'{pad}  <skos:prefLabel xml:lang="en">{escape(en)}</skos:prefLabel>']
    if pt:
        out.append(f'{pad}  <skos:prefLabel xml:lang="pt">{escape(pt)}</skos:prefLabel>')
    out.append(f"{pad}  <skos:inScheme rdf:resource={quoteattr(scheme)}/>")
    if inner:
        out.append(inner)
    out.append(f"{pad}</skos:Concept>")
    return "\n".join(out)


def render(oid, spec):
    scheme, parent, nested, flat = spec
    base = EX + oid.split("_")[0] + "#"
    full = lambda iri: iri if iri.startswith("http") else base + iri
    body = []
    if parent:
        inner = "\n".join(
            "    <skos:narrower>\n" + concept(full(i), en, pt, scheme, 6) + "\n    </skos:narrower>"
            for i, en, pt in nested)
        body.append(concept(parent[0], parent[1], parent[2], scheme, 2, inner))
    for i, en, pt in flat:
        body.append(concept(full(i), en, pt, scheme, 2))
    return ('<?xml version="1.0" encoding="UTF-8"?>\n'
            '<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"\n'
            '         xmlns:skos="http://www.w3.org/2004/02/skos/core#">\n'
            + "\n".join(body) + "\n</rdf:RDF>\n")


def main() -> int:
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/ontologies")
    out.mkdir(parents=True, exist_ok=True)
    for oid, spec in ONTOLOGIES.items():
        (out / f"{oid}.rdf").write_text(render(oid, spec), encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
