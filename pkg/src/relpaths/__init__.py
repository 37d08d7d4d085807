from relpaths.algebra import Relation, Universe
